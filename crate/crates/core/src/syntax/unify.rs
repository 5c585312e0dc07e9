//! First-order unification over type terms with metavariables. Used to
//! check primitive instantiations and to infer types while elaborating
//! surface programs.

use super::{PiType, Prim};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum TyTerm {
    Var(u32),
    Zero,
    One,
    Sum(Box<TyTerm>, Box<TyTerm>),
    Prod(Box<TyTerm>, Box<TyTerm>),
}

impl TyTerm {
    pub fn sum(a: TyTerm, b: TyTerm) -> TyTerm {
        TyTerm::Sum(Box::new(a), Box::new(b))
    }

    pub fn prod(a: TyTerm, b: TyTerm) -> TyTerm {
        TyTerm::Prod(Box::new(a), Box::new(b))
    }
}

impl From<&PiType> for TyTerm {
    fn from(t: &PiType) -> TyTerm {
        match t {
            PiType::Zero => TyTerm::Zero,
            PiType::One => TyTerm::One,
            PiType::Sum(a, b) => TyTerm::sum(a.as_ref().into(), b.as_ref().into()),
            PiType::Prod(a, b) => TyTerm::prod(a.as_ref().into(), b.as_ref().into()),
        }
    }
}

#[derive(Default, Debug)]
pub(crate) struct Subst {
    bindings: Vec<Option<TyTerm>>,
}

impl Subst {
    pub fn fresh(&mut self) -> TyTerm {
        self.bindings.push(None);
        TyTerm::Var(self.bindings.len() as u32 - 1)
    }

    fn shallow(&self, t: &TyTerm) -> TyTerm {
        let mut t = t.clone();
        while let TyTerm::Var(v) = t {
            match &self.bindings[v as usize] {
                Some(b) => t = b.clone(),
                None => break,
            }
        }
        t
    }

    fn occurs(&self, v: u32, t: &TyTerm) -> bool {
        match self.shallow(t) {
            TyTerm::Var(w) => v == w,
            TyTerm::Zero | TyTerm::One => false,
            TyTerm::Sum(a, b) | TyTerm::Prod(a, b) => self.occurs(v, &a) || self.occurs(v, &b),
        }
    }

    /// Unifies two terms. On failure the substitution may be partially
    /// extended; callers abort elaboration in that case.
    pub fn unify(&mut self, a: &TyTerm, b: &TyTerm) -> bool {
        let (a, b) = (self.shallow(a), self.shallow(b));
        match (&a, &b) {
            (TyTerm::Var(x), TyTerm::Var(y)) if x == y => true,
            (TyTerm::Var(x), t) | (t, TyTerm::Var(x)) => {
                if self.occurs(*x, t) {
                    return false;
                }
                self.bindings[*x as usize] = Some(t.clone());
                true
            }
            (TyTerm::Zero, TyTerm::Zero) | (TyTerm::One, TyTerm::One) => true,
            (TyTerm::Sum(a1, a2), TyTerm::Sum(b1, b2))
            | (TyTerm::Prod(a1, a2), TyTerm::Prod(b1, b2)) => {
                self.unify(a1, b1) && self.unify(a2, b2)
            }
            _ => false,
        }
    }

    /// Fully resolves a term, or `None` if a metavariable remains.
    pub fn resolve(&self, t: &TyTerm) -> Option<PiType> {
        match self.shallow(t) {
            TyTerm::Var(_) => None,
            TyTerm::Zero => Some(PiType::Zero),
            TyTerm::One => Some(PiType::One),
            TyTerm::Sum(a, b) => Some(PiType::sum(self.resolve(&a)?, self.resolve(&b)?)),
            TyTerm::Prod(a, b) => Some(PiType::prod(self.resolve(&a)?, self.resolve(&b)?)),
        }
    }

    /// Renders a partially known term, printing metavariables as `?n`.
    pub fn show(&self, t: &TyTerm) -> String {
        match self.shallow(t) {
            TyTerm::Var(v) => format!("?{v}"),
            TyTerm::Zero => "0".into(),
            TyTerm::One => "1".into(),
            TyTerm::Sum(a, b) => format!("({} + {})", self.show(&a), self.show(&b)),
            TyTerm::Prod(a, b) => format!("({} * {})", self.show(&a), self.show(&b)),
        }
    }
}

/// Instantiates the typing schema of a primitive with fresh metavariables.
pub(crate) fn schema(op: Prim, s: &mut Subst) -> (TyTerm, TyTerm) {
    use TyTerm as T;
    let (a, b, c) = (s.fresh(), s.fresh(), s.fresh());
    let sum = T::sum;
    let prod = T::prod;
    match op {
        Prim::Id => (a.clone(), a),
        Prim::UnitePlusL => (sum(T::Zero, a.clone()), a),
        Prim::UnitiPlusL => (a.clone(), sum(T::Zero, a)),
        Prim::UnitePlusR => (sum(a.clone(), T::Zero), a),
        Prim::UnitiPlusR => (a.clone(), sum(a, T::Zero)),
        Prim::SwapPlus => (sum(a.clone(), b.clone()), sum(b, a)),
        Prim::AssoclPlus => (
            sum(a.clone(), sum(b.clone(), c.clone())),
            sum(sum(a, b), c),
        ),
        Prim::AssocrPlus => (
            sum(sum(a.clone(), b.clone()), c.clone()),
            sum(a, sum(b, c)),
        ),
        Prim::UniteStarL => (prod(T::One, a.clone()), a),
        Prim::UnitiStarL => (a.clone(), prod(T::One, a)),
        Prim::UniteStarR => (prod(a.clone(), T::One), a),
        Prim::UnitiStarR => (a.clone(), prod(a, T::One)),
        Prim::SwapStar => (prod(a.clone(), b.clone()), prod(b, a)),
        Prim::AssoclStar => (
            prod(a.clone(), prod(b.clone(), c.clone())),
            prod(prod(a, b), c),
        ),
        Prim::AssocrStar => (
            prod(prod(a.clone(), b.clone()), c.clone()),
            prod(a, prod(b, c)),
        ),
        Prim::Absorbr => (prod(T::Zero, a), T::Zero),
        Prim::Factorzl => (T::Zero, prod(T::Zero, a)),
        Prim::Absorbl => (prod(a, T::Zero), T::Zero),
        Prim::Factorzr => (T::Zero, prod(a, T::Zero)),
        Prim::Dist => (
            prod(sum(a.clone(), b.clone()), c.clone()),
            sum(prod(a, c.clone()), prod(b, c)),
        ),
        Prim::Factor => (
            sum(prod(a.clone(), c.clone()), prod(b.clone(), c.clone())),
            prod(sum(a, b), c),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn occurs_check_rejects_cyclic_solution() {
        let mut s = Subst::default();
        let a = s.fresh();
        assert!(!s.unify(&a, &TyTerm::sum(a.clone(), TyTerm::One)));
    }

    #[test]
    fn dist_schema_resolves_from_source() {
        let mut s = Subst::default();
        let (src, tgt) = schema(Prim::Dist, &mut s);
        let given = PiType::prod(PiType::two(), PiType::Zero);
        assert!(s.unify(&src, &(&given).into()));
        let expected = PiType::sum(
            PiType::prod(PiType::One, PiType::Zero),
            PiType::prod(PiType::One, PiType::Zero),
        );
        assert_eq!(s.resolve(&tgt), Some(expected));
    }

    #[test]
    fn factorzl_target_is_underdetermined() {
        let mut s = Subst::default();
        let (src, tgt) = schema(Prim::Factorzl, &mut s);
        assert!(s.unify(&src, &TyTerm::Zero));
        assert_eq!(s.resolve(&tgt), None);
    }
}
