use proptest::prelude::*;
use walg::algebra::tables::range_level;
use walg::catalog::standard_algebras;
use walg::classify::{
    a_value, ell0, enumerate_pk, in_pk, is_extremal, unitarity_verdict, w_classification,
    xi_pairing, Condition, DominantWeight, Ell0, Level, Verdict, WModuleLabel,
};
use walg::rational::q;
use walg::{build_algebra, AlgebraData, AlgebraId, Rational};

fn algebras() -> Vec<AlgebraData> {
    standard_algebras()
        .into_iter()
        .map(|id| build_algebra(id).unwrap())
        .collect()
}

/// ℓ₀(h) from finite pairings only: λ = hθ + ν, (λ|λ+2ρ)/(2(k+h^∨)) - h.
fn ell0_oracle(alg: &AlgebraData, k: &Rational, nu: &DominantWeight, h: &Rational) -> Rational {
    let lambda = &alg.theta.scale(h) + nu.weight();
    let shifted = &lambda + &alg.rho.scale(&Rational::int(2));
    let kh = k + &alg.h_check;
    alg.pair(&lambda, &shifted).unwrap() / (Rational::int(2) * kh) - h
}

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..40, 1i64..12).prop_map(|(p, d)| q(p, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ell0_is_a_shifted_quadratic(a in 0usize..12, lvl in 1u32..8, pick in any::<prop::sample::Index>(), h in rational()) {
        let alg = &algebras()[a];
        let k = range_level(alg.id, lvl);
        let level = Level::new(alg, k.clone()).unwrap();
        let pk = enumerate_pk(&level).unwrap();
        let nu = pick.get(&pk);
        let l = ell0(&level, nu, &h);
        prop_assert_eq!(&l, &ell0_oracle(alg, &k, nu, &h));
        // ℓ₀(h) - A = (h - x)(h - (k + 1 - x)) / (k + h^∨), x = (ξ|ν)
        let x = xi_pairing(&level, nu);
        let y = &k + &Rational::one() - &x;
        let kh = &k + &alg.h_check;
        prop_assert_eq!(l - a_value(&level, nu), (&h - &x) * (&h - &y) / kh);
    }

    #[test]
    fn pk_membership_matches_coroot_bounds(a in 0usize..12, lvl in 1u32..10, raw in prop::collection::vec(0u32..25, 3)) {
        let alg = &algebras()[a];
        let level = Level::new(alg, range_level(alg.id, lvl)).unwrap();
        let n = alg.natural_fundamental.len();
        let nu = DominantWeight::new(alg, raw[..n].to_vec()).unwrap();
        let bounded = alg
            .theta_i
            .iter()
            .zip(level.m_values())
            .all(|(t, m)| alg.coroot_pair(nu.weight(), t).unwrap() <= m);
        let dominant = alg.natural_simple.iter().all(|s| alg.coroot_pair(nu.weight(), &s.weight).unwrap().is_nonneg_integer());
        prop_assert!(dominant);
        prop_assert_eq!(in_pk(&level, &nu), bounded);
        prop_assert_eq!(enumerate_pk(&level).unwrap().contains(&nu), bounded);
    }

    #[test]
    fn non_extremal_verdict_follows_the_bound(a in 0usize..12, lvl in 1u32..8, pick in any::<prop::sample::Index>(), d in rational()) {
        let alg = &algebras()[a];
        let level = Level::new(alg, range_level(alg.id, lvl)).unwrap();
        let pk: Vec<_> = enumerate_pk(&level).unwrap().into_iter().filter(|nu| !is_extremal(&level, nu).unwrap()).collect();
        prop_assume!(!pk.is_empty());
        let nu = pick.get(&pk).clone();
        let ell = a_value(&level, &nu) + &d;
        let verdict = unitarity_verdict(&level, &WModuleLabel { nu, ell0: Ell0::Value(ell) }).unwrap();
        if d.is_negative() {
            prop_assert_eq!(verdict, Verdict::NotUnitary(Condition::C1c));
        } else {
            prop_assert_eq!(verdict, Verdict::Unitary);
        }
    }

    #[test]
    fn off_range_levels_fail_a_necessary_condition_or_error(a in 0usize..12, k in rational()) {
        let alg = &algebras()[a];
        let Ok(level) = Level::new(alg, k) else { return Ok(()) };
        prop_assume!(!level.in_unitarity_range());
        let vac = WModuleLabel { nu: DominantWeight::zero(alg), ell0: Ell0::Value(Rational::zero()) };
        match unitarity_verdict(&level, &vac) {
            Ok(Verdict::NotUnitary(_)) | Err(walg::Error::OutOfRange { .. }) => {}
            other => prop_assert!(false, "unexpected {:?}", other),
        }
    }
}

/// Every level with a non-extremal ν has a free ℓ₀ family, hence infinitely
/// many irreducible modules. The levels where all of P⁺_k is extremal are
/// listed explicitly.
#[test]
fn free_family_witnesses_non_rationality() {
    let mut all_extremal = Vec::new();
    for alg in algebras() {
        for lvl in 1..=10 {
            let level = Level::new(&alg, range_level(alg.id, lvl)).unwrap();
            let entries = w_classification(&level).unwrap();
            let has_free = entries.iter().any(|e| e.label.ell0 == Ell0::Free);
            let has_non_extremal = entries.iter().any(|e| !e.extremal);
            assert_eq!(has_free, has_non_extremal, "{} level {lvl}", alg.id);
            if !has_free {
                all_extremal.push((alg.id, lvl));
            }
        }
    }
    assert_eq!(
        all_extremal,
        vec![
            (AlgebraId::Spo2m(3), 1),
            (AlgebraId::D21(2, 1), 1),
            (AlgebraId::D21(3, 1), 1)
        ]
    );
}
