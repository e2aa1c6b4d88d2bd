//! Published closed forms for each family: dual Coxeter number, χ_i, the
//! levels M_i(k) as explicit functions of k, and the unitarity range.
//!
//! Nothing here is derived from root data. The catalog self-check and the
//! classifier compare these values against the ones recomputed from roots.

use crate::rational::{q, Rational};

use super::AlgebraId;

pub fn dual_coxeter(id: AlgebraId) -> Rational {
    match id {
        AlgebraId::Psl22 => Rational::zero(),
        AlgebraId::Spo2m(m) => Rational::int(2) - q(m as i64, 2),
        AlgebraId::D21(..) => Rational::zero(),
        AlgebraId::F4 => Rational::int(-2),
        AlgebraId::G3 => q(-3, 2),
    }
}

/// χ_i for each summand of g^♮.
pub fn chi(id: AlgebraId) -> Vec<Rational> {
    match id {
        AlgebraId::Spo2m(3) => vec![Rational::int(-2)],
        AlgebraId::D21(..) => vec![Rational::int(-1); 2],
        _ => vec![Rational::int(-1)],
    }
}

/// M_i(k) from the closed forms `-M_i(k) = ...`.
pub fn m_closed_form(id: AlgebraId, k: &Rational) -> Vec<Rational> {
    let one = Rational::one();
    match id {
        AlgebraId::Psl22 => vec![-(k + &one)],
        AlgebraId::Spo2m(3) => vec![-(Rational::int(4) * k + Rational::int(2))],
        AlgebraId::Spo2m(_) => vec![-(Rational::int(2) * k + &one)],
        AlgebraId::D21(m, n) => {
            let (m, n) = (m as i64, n as i64);
            vec![-(q(m + n, n) * k + &one), -(q(m + n, m) * k + &one)]
        }
        AlgebraId::F4 => vec![-(q(3, 2) * k + one)],
        AlgebraId::G3 => vec![-(q(4, 3) * k + one)],
    }
}

/// Step `s` and offset `c` such that the range is `-k ∈ s·(ℕ + c)`, ℕ = {1, 2, ...}.
fn range_step(id: AlgebraId) -> (Rational, i64) {
    match id {
        AlgebraId::Psl22 => (Rational::one(), 1),
        AlgebraId::Spo2m(3) => (q(1, 4), 2),
        AlgebraId::Spo2m(_) => (q(1, 2), 1),
        AlgebraId::D21(m, n) => (q((m * n) as i64, (m + n) as i64), 0),
        AlgebraId::F4 => (q(2, 3), 1),
        AlgebraId::G3 => (q(3, 4), 1),
    }
}

/// True iff `-k` lies in the published unitarity range.
pub fn in_range(id: AlgebraId, k: &Rational) -> bool {
    let (step, offset) = range_step(id);
    let t = -k / &step;
    t.is_integer() && t >= Rational::int(offset + 1)
}

/// The `q`-th level of the range, `q = 1, 2, ...`, in increasing order of `-k`.
pub fn range_level(id: AlgebraId, idx: u32) -> Rational {
    assert!(idx >= 1, "range levels are indexed from 1");
    let (step, offset) = range_step(id);
    -(step * Rational::int(idx as i64 + offset))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_levels() {
        assert_eq!(range_level(AlgebraId::Psl22, 1), Rational::int(-2));
        assert_eq!(range_level(AlgebraId::Spo2m(3), 1), q(-3, 4));
        assert_eq!(range_level(AlgebraId::Spo2m(5), 1), Rational::int(-1));
        assert_eq!(range_level(AlgebraId::D21(2, 1), 1), q(-2, 3));
        assert_eq!(range_level(AlgebraId::F4, 1), q(-4, 3));
        assert_eq!(range_level(AlgebraId::G3, 1), q(-3, 2));
    }

    #[test]
    fn range_membership() {
        assert!(in_range(AlgebraId::Psl22, &Rational::int(-2)));
        assert!(!in_range(AlgebraId::Psl22, &Rational::int(-1)));
        assert!(!in_range(AlgebraId::F4, &q(-2, 3)));
        assert!(in_range(AlgebraId::F4, &q(-4, 3)));
        assert!(in_range(AlgebraId::Spo2m(3), &q(-3, 4)));
        assert!(!in_range(AlgebraId::Spo2m(3), &q(-1, 2)));
        assert!(!in_range(AlgebraId::Spo2m(3), &q(-7, 8)));
        assert!(in_range(AlgebraId::D21(3, 2), &q(-6, 5)));
        assert!(!in_range(AlgebraId::D21(3, 2), &Rational::zero()));
        assert!(!in_range(AlgebraId::G3, &q(3, 2)));
    }

    #[test]
    fn closed_forms_at_first_levels() {
        assert_eq!(
            m_closed_form(AlgebraId::Spo2m(3), &q(-3, 4)),
            vec![Rational::one()]
        );
        assert_eq!(
            m_closed_form(AlgebraId::Psl22, &Rational::int(-2)),
            vec![Rational::one()]
        );
        assert_eq!(
            m_closed_form(AlgebraId::D21(2, 1), &q(-2, 3)),
            vec![Rational::one(), Rational::zero()]
        );
    }
}
