//! Monoidal structure data over an arbitrary category instance.
//!
//! Nothing here is strict: carriers like `X x (Y x Z)` and `(X x Y) x Z`
//! are genuinely different objects, so every axiom checker and derived
//! construction composes with the explicit associators and unitors carried
//! by the structure.

use crate::cat::Category;
use crate::error::{CatError, Result};
use std::sync::Arc;

pub type ObjFn2<C> =
    Arc<dyn Fn(&<C as Category>::Obj, &<C as Category>::Obj) -> Result<<C as Category>::Obj> + Send + Sync>;
pub type MorFn2<C> =
    Arc<dyn Fn(&<C as Category>::Mor, &<C as Category>::Mor) -> Result<<C as Category>::Mor> + Send + Sync>;
pub type ObjToMor<C> =
    Arc<dyn Fn(&<C as Category>::Obj) -> Result<<C as Category>::Mor> + Send + Sync>;
pub type Obj2ToMor<C> =
    Arc<dyn Fn(&<C as Category>::Obj, &<C as Category>::Obj) -> Result<<C as Category>::Mor> + Send + Sync>;
pub type Obj3ToMor<C> = Arc<
    dyn Fn(&<C as Category>::Obj, &<C as Category>::Obj, &<C as Category>::Obj) -> Result<<C as Category>::Mor>
        + Send
        + Sync,
>;

/// Tensor data with unit and structural isomorphisms. The optional braiding
/// enables the braided-to-duoidal construction.
#[derive(Clone)]
pub struct MonoidalStructure<C: Category> {
    pub cat: C,
    pub name: String,
    pub unit: C::Obj,
    tensor_obj: ObjFn2<C>,
    tensor_mor: MorFn2<C>,
    /// `(A (x) B) (x) C -> A (x) (B (x) C)`
    associator: Obj3ToMor<C>,
    /// `I (x) A -> A`
    left_unitor: ObjToMor<C>,
    /// `A (x) I -> A`
    right_unitor: ObjToMor<C>,
    /// `A (x) B -> B (x) A`
    braiding: Option<Obj2ToMor<C>>,
}

impl<C: Category> MonoidalStructure<C> {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        cat: C,
        name: impl Into<String>,
        unit: C::Obj,
        tensor_obj: ObjFn2<C>,
        tensor_mor: MorFn2<C>,
        associator: Obj3ToMor<C>,
        left_unitor: ObjToMor<C>,
        right_unitor: ObjToMor<C>,
        braiding: Option<Obj2ToMor<C>>,
    ) -> Self {
        MonoidalStructure {
            cat,
            name: name.into(),
            unit,
            tensor_obj,
            tensor_mor,
            associator,
            left_unitor,
            right_unitor,
            braiding,
        }
    }

    pub fn tensor_obj(&self, a: &C::Obj, b: &C::Obj) -> Result<C::Obj> {
        (self.tensor_obj)(a, b)
    }

    pub fn tensor_mor(&self, f: &C::Mor, g: &C::Mor) -> Result<C::Mor> {
        (self.tensor_mor)(f, g)
    }

    pub fn associator(&self, a: &C::Obj, b: &C::Obj, c: &C::Obj) -> Result<C::Mor> {
        (self.associator)(a, b, c)
    }

    pub fn associator_inv(&self, a: &C::Obj, b: &C::Obj, c: &C::Obj) -> Result<C::Mor> {
        self.cat.invert(&self.associator(a, b, c)?)
    }

    pub fn left_unitor(&self, a: &C::Obj) -> Result<C::Mor> {
        (self.left_unitor)(a)
    }

    pub fn right_unitor(&self, a: &C::Obj) -> Result<C::Mor> {
        (self.right_unitor)(a)
    }

    pub fn left_unitor_inv(&self, a: &C::Obj) -> Result<C::Mor> {
        self.cat.invert(&self.left_unitor(a)?)
    }

    pub fn right_unitor_inv(&self, a: &C::Obj) -> Result<C::Mor> {
        self.cat.invert(&self.right_unitor(a)?)
    }

    pub fn has_braiding(&self) -> bool {
        self.braiding.is_some()
    }

    pub fn braiding(&self, a: &C::Obj, b: &C::Obj) -> Result<C::Mor> {
        match &self.braiding {
            Some(b_fn) => b_fn(a, b),
            None => Err(CatError::structural(format!(
                "monoidal structure {} carries no braiding",
                self.name
            ))),
        }
    }

    /// Left-nested n-fold tensor: `(..(X1 (x) X2) ..) (x) Xn`; the empty
    /// tensor is the unit.
    pub fn tensor_all(&self, objs: &[C::Obj]) -> Result<C::Obj> {
        match objs.split_first() {
            None => Ok(self.unit.clone()),
            Some((first, rest)) => {
                let mut acc = first.clone();
                for x in rest {
                    acc = self.tensor_obj(&acc, x)?;
                }
                Ok(acc)
            }
        }
    }

    /// Left-nested n-fold tensor of morphisms; the empty tensor is the
    /// identity of the unit.
    pub fn tensor_mor_all(&self, mors: &[C::Mor]) -> Result<C::Mor> {
        match mors.split_first() {
            None => Ok(self.cat.identity(&self.unit)),
            Some((first, rest)) => {
                let mut acc = first.clone();
                for f in rest {
                    acc = self.tensor_mor(&acc, f)?;
                }
                Ok(acc)
            }
        }
    }

    /// The canonical isomorphism `(X1 (x) .. (x) Xk) (x) (X_{k+1} (x) .. (x) Xn)
    /// -> X1 (x) .. (x) Xn` between the left-nested tensor of two left-nested
    /// blocks and the single left-nested tensor, built from associators.
    pub fn merge_blocks(&self, left: &[C::Obj], right: &[C::Obj]) -> Result<C::Mor> {
        let left_obj = self.tensor_all(left)?;
        if right.is_empty() {
            // (L) (x) I -> L
            return self.right_unitor(&left_obj);
        }
        if left.is_empty() {
            let right_obj = self.tensor_all(right)?;
            return self.left_unitor(&right_obj);
        }
        // Peel elements off the right block: L (x) (R' (x) x) needs an
        // associator-inverse (L (x) R') (x) x after recursing on R'.
        let (last, init) = right.split_last().unwrap();
        if init.is_empty() {
            // L (x) X_n is already left-nested.
            return Ok(self.cat.identity(&self.tensor_obj(&left_obj, last)?));
        }
        let init_obj = self.tensor_all(init)?;
        // a^{-1}: L (x) (R' (x) x) -> (L (x) R') (x) x
        let assoc_inv = self.associator_inv(&left_obj, &init_obj, last)?;
        let rec = self.merge_blocks(left, init)?;
        let id_last = self.cat.identity(last);
        let step = self.tensor_mor(&rec, &id_last)?;
        self.cat.compose(&assoc_inv, &step)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Monoidal,
    Comonoidal,
}

/// Endofunctor data on a category instance.
#[derive(Clone)]
pub struct FunctorData<C: Category> {
    pub name: String,
    on_obj: Arc<dyn Fn(&C::Obj) -> Result<C::Obj> + Send + Sync>,
    on_mor: Arc<dyn Fn(&C::Mor) -> Result<C::Mor> + Send + Sync>,
}

impl<C: Category> FunctorData<C> {
    pub fn new(
        name: impl Into<String>,
        on_obj: Arc<dyn Fn(&C::Obj) -> Result<C::Obj> + Send + Sync>,
        on_mor: Arc<dyn Fn(&C::Mor) -> Result<C::Mor> + Send + Sync>,
    ) -> Self {
        FunctorData {
            name: name.into(),
            on_obj,
            on_mor,
        }
    }

    pub fn identity(cat: &C) -> Self
    where
        C: Clone,
    {
        let _ = cat;
        FunctorData {
            name: "Id".into(),
            on_obj: Arc::new(|x| Ok(x.clone())),
            on_mor: Arc::new(|f| Ok(f.clone())),
        }
    }

    pub fn on_obj(&self, x: &C::Obj) -> Result<C::Obj> {
        (self.on_obj)(x)
    }

    pub fn on_mor(&self, f: &C::Mor) -> Result<C::Mor> {
        (self.on_mor)(f)
    }
}

/// A functor together with a (co)monoidal structure on it.
///
/// For the monoidal direction the component maps
/// `comp(X,Y): F X (x) F Y -> F(X (x) Y)` and `comp0: I -> F I`; for the
/// comonoidal direction they point the other way
/// (`F(X (x) Y) -> F X (x) F Y` and `F I -> I`).
#[derive(Clone)]
pub struct MonoidalFunctorStructure<C: Category> {
    pub functor: FunctorData<C>,
    pub tensor: MonoidalStructure<C>,
    pub direction: Direction,
    comp: Obj2ToMor<C>,
    pub comp0: C::Mor,
}

impl<C: Category> MonoidalFunctorStructure<C> {
    pub fn new(
        functor: FunctorData<C>,
        tensor: MonoidalStructure<C>,
        direction: Direction,
        comp: Obj2ToMor<C>,
        comp0: C::Mor,
    ) -> Self {
        MonoidalFunctorStructure {
            functor,
            tensor,
            direction,
            comp,
            comp0,
        }
    }

    pub fn comp(&self, x: &C::Obj, y: &C::Obj) -> Result<C::Mor> {
        (self.comp)(x, y)
    }

    /// Iterated structure map
    /// `F X1 (x) ... (x) F Xn -> F(X1 (x) ... (x) Xn)` (left-nested on both
    /// sides). `n = 1` is the identity and `n = 0` is `comp0`.
    pub fn iterate(&self, objects: &[C::Obj]) -> Result<C::Mor> {
        if self.direction != Direction::Monoidal {
            return Err(CatError::structural(
                "iterated structure maps in this orientation need the monoidal direction",
            ));
        }
        match objects.len() {
            0 => Ok(self.comp0.clone()),
            1 => {
                let fx = self.functor.on_obj(&objects[0])?;
                Ok(self.cat().identity(&fx))
            }
            _ => {
                let (last, init) = objects.split_last().unwrap();
                let init_obj = self.tensor.tensor_all(init)?;
                let phi_init = self.iterate(init)?;
                let id_last = self.cat().identity(&self.functor.on_obj(last)?);
                let step = self.tensor.tensor_mor(&phi_init, &id_last)?;
                let outer = self.comp(&init_obj, last)?;
                self.cat().compose(&step, &outer)
            }
        }
    }

    /// Dual iteration `F(X1 (x) ... (x) Xn) -> F X1 (x) ... (x) F Xn` for the
    /// comonoidal direction; `n = 0` is `comp0`.
    pub fn iterate_comonoidal(&self, objects: &[C::Obj]) -> Result<C::Mor> {
        if self.direction != Direction::Comonoidal {
            return Err(CatError::structural(
                "iterated structure maps in this orientation need the comonoidal direction",
            ));
        }
        match objects.len() {
            0 => Ok(self.comp0.clone()),
            1 => {
                let fx = self.functor.on_obj(&objects[0])?;
                Ok(self.cat().identity(&fx))
            }
            _ => {
                let (last, init) = objects.split_last().unwrap();
                let init_obj = self.tensor.tensor_all(init)?;
                let outer = self.comp(&init_obj, last)?;
                let psi_init = self.iterate_comonoidal(init)?;
                let id_last = self.cat().identity(&self.functor.on_obj(last)?);
                let step = self.tensor.tensor_mor(&psi_init, &id_last)?;
                self.cat().compose(&outer, &step)
            }
        }
    }

    fn cat(&self) -> &C {
        &self.tensor.cat
    }
}
