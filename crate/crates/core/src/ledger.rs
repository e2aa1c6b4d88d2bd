//! Exact weight and pairing identities behind the structure of the maximal
//! ideal and the Zhu-algebra lists. Each function returns a [`Report`];
//! a failed identity is a failed entry, not an error.

use crate::affine::{
    affine_coroot_pair, affine_pair, alpha0, eta, eta_membership_check, AffineWeight,
};
use crate::algebra::{AlgebraData, AlgebraId, Weight};
use crate::classify::{
    a_value, affine_module_descends, ell0, enumerate_pk, extremal_h_set, hamiltonian_reduce,
    is_extremal, is_extremal_by_shift, nu_hat, unitarity_verdict, w_classification,
    w_module_exists, AffineModuleLabel, DominantWeight, Ell0, Level, WModuleLabel,
};
use crate::error::{Error, Result};
use crate::linalg::{solve_linear, Matrix};
use crate::rational::{q, Rational};
use crate::report::{CheckValue, Report};

/// Dynkin labels `w(α_a^∨)` of a g^♮ weight, i.e. coordinates in the ω basis.
pub fn dynkin_labels(alg: &AlgebraData, w: &Weight) -> Result<Vec<Rational>> {
    alg.natural_simple
        .iter()
        .map(|a| alg.coroot_pair(w, &a.weight))
        .collect()
}

fn w_weight(alg: &AlgebraData, w: &Weight, conformal: Rational) -> Result<CheckValue> {
    Ok(CheckValue::WWeight {
        weight: dynkin_labels(alg, w)?,
        conformal,
    })
}

fn aff(w: &Weight) -> AffineWeight {
    AffineWeight::finite(w.clone())
}

/// Weights of v_i and, for spo(2|3), of ṽ₁.
pub fn check_singular_weights(level: &Level) -> Result<Report> {
    level.require_range()?;
    let alg = level.alg();
    let name = alg.id.to_string();
    let k = Some(level.k());
    let mut rep = Report::new();

    for (i, m) in level.m_values().iter().enumerate() {
        // (J^{θ_i}_{-1})^{M_i+1}: M_i+1 generators of weight (θ_i, 1)
        let count = m.to_i64().expect("integral in range") + 1;
        let mut weight = Weight::zero(alg.id);
        let mut conformal = Rational::zero();
        for _ in 0..count {
            weight = &weight + &alg.theta_i[i];
            conformal += &Rational::one();
        }
        let mp1 = m + Rational::one();
        rep.push(
            &format!("ledger.v.{}.weight", i + 1),
            "v_i has weight ((M_i+1)θ_i, M_i+1)",
            &name,
            k,
            w_weight(alg, &alg.theta_i[i].scale(&mp1), mp1.clone())?,
            w_weight(alg, &weight, conformal)?,
        );
    }

    if alg.id == AlgebraId::Spo2m(3) {
        let m1 = &level.m_values()[0];
        let big_m = Rational::int(-4) * level.k();
        let j = m1 - Rational::one();
        // (J^{θ₁}_{-1})^{M₁-1} G^{x_{-α₁}}_{-1}: the G factor carries (ξ, 3/2)
        let weight = &alg.theta_i[0].scale(&j) + &alg.xi;
        let conformal = &j + &q(3, 2);
        let omega = &alg.natural_fundamental[0];
        let expected_weight = omega.scale(&(Rational::int(2) * (&big_m - Rational::int(2))));
        rep.push(
            "ledger.v_tilde.weight",
            "ṽ₁ has weight (2(m-2)ω₁, m-3/2) with m = -4k",
            &name,
            k,
            w_weight(alg, &expected_weight, &big_m - &q(3, 2))?,
            w_weight(alg, &weight, conformal)?,
        );
    }
    Ok(rep)
}

/// Pairings of Λ' = kΛ₀-δ+θ-α₁ and Λ'''_i with η_i and α₁.
pub fn check_affine_pairings(level: &Level) -> Result<Report> {
    level.require_range()?;
    let alg = level.alg();
    let name = alg.id.to_string();
    let k = level.k();
    let mut rep = Report::new();

    let k_l0 = AffineWeight::lambda0(alg.id).scale(k);
    let delta = AffineWeight::delta(alg.id);
    let a1 = aff(alg.alpha1());
    let lambda1 = &(&(&k_l0 - &delta) + &aff(&alg.theta)) - &a1;
    let m = level.m_values();

    for (i, mi) in m.iter().enumerate() {
        let eta_i = eta(alg, i).weight();
        rep.push(
            &format!("ledger.lambda_prime.eta.{}", i + 1),
            "(Λ'|η_i^∨) = M_i(k)",
            &name,
            Some(k),
            mi.clone(),
            affine_coroot_pair(alg, &lambda1, &eta_i)?,
        );
    }

    let lambda3 = |i: usize| -> AffineWeight {
        let mp1 = &m[i] + &Rational::one();
        &lambda1 - &eta(alg, i).weight().scale(&mp1)
    };

    if alg.id == AlgebraId::Spo2m(3) {
        let mu = lambda3(0);
        let a01 = &alpha0(alg).weight() + &a1;
        rep.push(
            "ledger.spo23.mu.alpha01",
            "(μ|α₀+α₁) = -k-1/2 for the weight μ of w₁",
            &name,
            Some(k),
            -k - q(1, 2),
            affine_pair(alg, &mu, &a01)?,
        );
        let mp1 = &m[0] + &Rational::one();
        let w = &k_l0 - &eta(alg, 0).weight().scale(&mp1);
        rep.push(
            "ledger.spo23.alpha1",
            "(kΛ₀-(M₁+1)(δ-θ₁)|α₁) = (M₁+1)/2",
            &name,
            Some(k),
            &mp1 / &Rational::int(2),
            affine_pair(alg, &w, &a1)?,
        );
    } else {
        for i in 0..alg.theta_i.len() {
            rep.push(
                &format!("ledger.lambda_triple.alpha1.{}", i + 1),
                "(Λ'''_i|α₁) = -k+1",
                &name,
                Some(k),
                Rational::one() - k,
                affine_pair(alg, &lambda3(i), &a1)?,
            );
        }
    }
    Ok(rep)
}

/// Identities evaluated on every ν ∈ P⁺_k at several h.
pub fn check_module_pairings(level: &Level) -> Result<Report> {
    let alg = level.alg();
    let name = alg.id.to_string();
    let k = level.k();
    let m = level.m_values();
    let mut rep = Report::new();
    let a0 = alpha0(alg).weight();
    let a1 = aff(alg.alpha1());
    let k_l0 = AffineWeight::lambda0(alg.id).scale(k);

    for (i, mi) in m.iter().enumerate() {
        let eta_i = eta(alg, i).weight();
        rep.push(
            &format!("ledger.s.{}", i + 1),
            "s = (kΛ₀|η_i^∨) = M_i(k) - χ_i",
            &name,
            Some(k),
            mi - &alg.chi[i],
            affine_coroot_pair(alg, &k_l0, &eta_i)?,
        );
        rep.push(
            &format!("ledger.alpha1.restriction.{}", i + 1),
            "(α₁|θ_i^∨) = -(ξ|θ_i^∨)",
            &name,
            Some(k),
            -alg.coroot_pair(&alg.xi, &alg.theta_i[i])?,
            alg.coroot_pair(alg.alpha1(), &alg.theta_i[i])?,
        );
    }

    for nu in enumerate_pk(level)? {
        let pairings = nu.theta_pairings(alg);
        let mut hs = extremal_h_set(level, &nu);
        hs.push(q(1, 3));
        for h in &hs {
            let nh = nu_hat(level, &nu, h);
            for i in 0..alg.theta_i.len() {
                let eta_i = eta(alg, i).weight();
                let p = Rational::int(pairings[i]);
                let tag = format!("{}.nu{}.h{}", i + 1, nu, h);
                let with_a0 = &(&nh - &a1) - &a0;
                rep.push(
                    &format!("ledger.ne1.{tag}"),
                    "(ν̂_h-α₁-α₀|η_i^∨) = M_i(k) - ν(θ_i^∨)",
                    &name,
                    Some(k),
                    &m[i] - &p,
                    affine_coroot_pair(alg, &with_a0, &eta_i)?,
                );
                rep.push(
                    &format!("ledger.ne2.{tag}"),
                    "(ν̂_h-α₁|η_i^∨) = M_i(k) - ν(θ_i^∨)",
                    &name,
                    Some(k),
                    &m[i] - &p,
                    affine_coroot_pair(alg, &(&nh - &a1), &eta_i)?,
                );
                let twice = &(&(&nh - &a1) - &a1) - &a0;
                rep.push(
                    &format!("ledger.mik.{tag}"),
                    "(ν̂_h-2α₁-α₀|η_i^∨) = M_i(k) + χ_i - ν(θ_i^∨)",
                    &name,
                    Some(k),
                    &(&m[i] + &alg.chi[i]) - &p,
                    affine_coroot_pair(alg, &twice, &eta_i)?,
                );
            }
        }
    }
    Ok(rep)
}

/// Solves (mqα₂, mq) - (nqα₃, nq) = a₁(-α₂,0) + a₂(-α₃,0) + a₃((α₂+α₃)/2, 1/2)
/// for D(2,1; m/n) at k = -mnq/(m+n) and checks a = (-nq, mq, 2(m-n)q).
pub fn check_d21_cone(m: u32, n: u32, qn: u32) -> Result<Report> {
    if m <= n {
        return Err(Error::Invalid(format!(
            "cone check needs m > n, got m = {m}, n = {n}"
        )));
    }
    if qn == 0 {
        return Err(Error::Invalid("cone check needs q >= 1".into()));
    }
    let alg = crate::algebra::build_algebra(AlgebraId::D21(m, n))?;
    let k = Rational::int(-((m * n * qn) as i64)) / Rational::int((m + n) as i64);
    let level = Level::new(&alg, k.clone())?;
    level.require_range()?;
    let big_m = level.m_values();
    let name = alg.id.to_string();

    // W-weights as (coefficients over Π^♮, conformal weight)
    let coords = |w: &Weight, c: Rational| -> Result<Vec<Rational>> {
        let mut v = alg.natural_coefficients(w)?;
        v.push(c);
        Ok(v)
    };
    let v1 = &big_m[0] + &Rational::one();
    let v2 = &big_m[1] + &Rational::one();
    let lhs1 = coords(&alg.theta_i[0].scale(&v1), v1.clone())?;
    let lhs2 = coords(&alg.theta_i[1].scale(&v2), v2.clone())?;
    let rhs: Vec<Rational> = lhs1.iter().zip(&lhs2).map(|(a, b)| a - b).collect();

    let a2 = &alg.natural_simple[0].weight;
    let a3 = &alg.natural_simple[1].weight;
    let cols = vec![
        coords(&-a2, Rational::zero())?,
        coords(&-a3, Rational::zero())?,
        coords(&(a2 + a3).scale(&q(1, 2)), q(1, 2))?,
    ];
    let sol = solve_linear(&Matrix::from_columns(&cols)?, &rhs)?;

    let (mq, nq) = ((m * qn) as i64, (n * qn) as i64);
    let expected = vec![
        Rational::int(-nq),
        Rational::int(mq),
        Rational::int(2 * (mq - nq)),
    ];
    let mut rep = Report::new();
    rep.push(
        &format!("ledger.d21.cone.{m}.{n}.{qn}"),
        "cone coefficients (a₁, a₂, a₃) = (-nq, mq, 2(m-n)q)",
        &name,
        Some(&k),
        expected,
        sol.clone(),
    );
    rep.push_holds(
        &format!("ledger.d21.cone.{m}.{n}.{qn}.negative"),
        "a₁ < 0",
        &name,
        Some(&k),
        sol[0].is_negative(),
    );
    Ok(rep)
}

/// A-values and classification lists at the spo(2|3) and psl(2|2) levels.
pub fn check_zhu_consequences(level: &Level) -> Result<Report> {
    level.require_range()?;
    let alg = level.alg();
    let name = alg.id.to_string();
    let k = level.k();
    let mut rep = Report::new();
    let coeff_weight = |j: i64| DominantWeight::new(alg, vec![j as u32]);

    // expected list entries as (j, ℓ₀) with ℓ₀ = None for the free family
    type Entries = Vec<(i64, Option<Rational>)>;
    let (expected_list, a_checks): (Entries, Vec<(i64, Rational)>) = match alg.id {
        AlgebraId::Spo2m(3) => {
            let m = (Rational::int(-4) * k).to_i64().expect("integral in range");
            let mut list: Vec<_> = (0..=m - 4).map(|j| (j, None)).collect();
            list.push((m - 3, Some(q(m - 3, 4))));
            list.push((m - 2, Some(q(m - 2, 4))));
            (list, vec![(m - 3, q(m - 3, 4)), (m - 2, q(m - 2, 4))])
        }
        AlgebraId::Psl22 => {
            let m = (-k - Rational::one()).to_i64().expect("integral in range");
            let mut list: Vec<_> = (0..m).map(|j| (j, None)).collect();
            list.push((m, Some(q(m, 2))));
            (list, vec![(m, q(m, 2))])
        }
        other => {
            return Err(Error::InvalidAlgebra(format!(
                "Zhu-algebra lists are only known for spo2-3 and psl2-2, not {other}"
            )))
        }
    };

    for (j, want) in a_checks {
        rep.push(
            &format!("ledger.zhu.a.{j}"),
            "A(k, jω₁) matches the Zhu-algebra list",
            &name,
            Some(k),
            want,
            a_value(level, &coeff_weight(j)?),
        );
    }

    let render = |j: i64, l: &Option<Rational>| match l {
        Some(v) => format!("({j},{v})"),
        None => format!("({j},free)"),
    };
    let expected: Vec<String> = expected_list.iter().map(|(j, l)| render(*j, l)).collect();
    let computed: Vec<String> = w_classification(level)?
        .iter()
        .map(|e| {
            let l = match &e.label.ell0 {
                Ell0::Value(v) => Some(v.clone()),
                Ell0::Free => None,
            };
            render(e.label.nu.coeffs()[0] as i64, &l)
        })
        .collect();
    rep.push(
        "ledger.zhu.list",
        "classification list matches the Zhu-algebra list",
        &name,
        Some(k),
        CheckValue::Text(expected.join(" ")),
        CheckValue::Text(computed.join(" ")),
    );
    Ok(rep)
}

/// Cross-identities of the classification at one level: M_i against the
/// closed forms, both extremality tests, ℓ₀ symmetry, the E-set/A link,
/// the m_i bound, reduction of admissible labels, and the vacuum.
pub fn check_classify_identities(level: &Level) -> Result<Report> {
    let alg = level.alg();
    let name = alg.id.to_string();
    let k = level.k();
    let mut rep = Report::new();
    let m = level.m_values();
    rep.push(
        "classify.m.closed_form",
        "M_i(k) agrees with the closed forms",
        &name,
        Some(k),
        crate::algebra::tables::m_closed_form(alg.id, k),
        m.clone(),
    );
    rep.push_holds(
        "classify.m.nonneg",
        "M_i(k) ∈ ℤ₊ in the unitarity range",
        &name,
        Some(k),
        m.iter().all(Rational::is_nonneg_integer),
    );

    let one = Rational::one();
    for nu in enumerate_pk(level)? {
        let tag = format!("nu{nu}");
        let extremal = is_extremal(level, &nu)?;
        rep.push(
            &format!("classify.extremal.dual.{tag}"),
            "ν(θ_i^∨) > M_i+χ_i for some i ⟺ ν+ξ ∉ P⁺_k",
            &name,
            Some(k),
            extremal,
            is_extremal_by_shift(level, &nu)?,
        );

        let x = crate::classify::xi_pairing(level, &nu);
        let e_set = extremal_h_set(level, &nu);
        let a = a_value(level, &nu);
        let samples = [
            Rational::zero(),
            q(1, 3),
            q(-2, 5),
            x.clone(),
            &x + &q(1, 7),
            &(k + &one) - &x,
        ];
        let mut symmetric = true;
        let mut linked = true;
        let mut reduces = true;
        for h in &samples {
            let l = ell0(level, &nu, h);
            symmetric &= l == ell0(level, &nu, &(&(k + &one) - h));
            linked &= (l == a) == e_set.contains(h);
            let label = AffineModuleLabel {
                nu: nu.clone(),
                h: h.clone(),
            };
            if affine_module_descends(level, &label)? {
                if let Some(w) = hamiltonian_reduce(level, &label) {
                    reduces &= w_module_exists(level, &w)?;
                }
            }
        }
        rep.push_holds(
            &format!("classify.ell0.symmetry.{tag}"),
            "ℓ₀(h) = ℓ₀(k+1-h)",
            &name,
            Some(k),
            symmetric,
        );
        rep.push_holds(
            &format!("classify.ell0.a_link.{tag}"),
            "ℓ₀(h) = A(k,ν) ⟺ h ∈ E_{k,ν}",
            &name,
            Some(k),
            linked,
        );
        rep.push_holds(
            &format!("classify.reduce.{tag}"),
            "H₀ of an admissible V_k-module is zero or a W_k-module",
            &name,
            Some(k),
            reduces,
        );
        if !extremal {
            let slack = nu
                .theta_pairings(alg)
                .iter()
                .zip(level.m_plus_chi())
                .all(|(p, b)| (b - Rational::int(*p)).is_nonneg_integer());
            rep.push_holds(
                &format!("classify.m_i.{tag}"),
                "m_i = M_i+χ_i-ν(θ_i^∨) ∈ ℤ₊ for non-extremal ν",
                &name,
                Some(k),
                slack,
            );
        }
    }
    let vacuum = WModuleLabel {
        nu: DominantWeight::zero(alg),
        ell0: Ell0::Value(Rational::zero()),
    };
    rep.push_holds(
        "classify.vacuum.exists",
        "L^W(0,0) is a W_k-module",
        &name,
        Some(k),
        w_module_exists(level, &vacuum)?,
    );
    rep.push(
        "classify.vacuum.verdict",
        "L^W(0,0) is unitary",
        &name,
        Some(k),
        CheckValue::Text("unitary".into()),
        CheckValue::Text(unitarity_verdict(level, &vacuum)?.to_string()),
    );
    Ok(rep)
}

/// Every ledger check that applies to `alg` at the given in-range levels,
/// in a fixed order.
pub fn run_all(alg: &AlgebraData, levels: &[Rational]) -> Result<Report> {
    let mut rep = eta_membership_check(alg);
    for k in levels {
        let level = Level::new(alg, k.clone())?;
        rep.extend(check_singular_weights(&level)?);
        rep.extend(check_affine_pairings(&level)?);
        rep.extend(check_module_pairings(&level)?);
        rep.extend(check_classify_identities(&level)?);
        if matches!(alg.id, AlgebraId::Spo2m(3) | AlgebraId::Psl22) {
            rep.extend(check_zhu_consequences(&level)?);
        }
        if let AlgebraId::D21(m, n) = alg.id {
            if m != n {
                let (hi, lo) = (m.max(n), m.min(n));
                let qn = (-k * Rational::int((m + n) as i64) / Rational::int((m * n) as i64))
                    .to_i64()
                    .expect("integral in range");
                rep.extend(check_d21_cone(hi, lo, qn as u32)?);
            }
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::build_algebra;
    use crate::report::CheckEntry;

    fn alg(s: &str) -> AlgebraData {
        build_algebra(s.parse().unwrap()).unwrap()
    }

    fn find<'r>(rep: &'r Report, id: &str) -> &'r CheckEntry {
        rep.entries
            .iter()
            .find(|e| e.check_id == id)
            .unwrap_or_else(|| panic!("{id} missing"))
    }

    #[test]
    fn v_tilde_at_m_4() {
        let a = alg("spo2-3");
        let l = Level::new(&a, Rational::int(-1)).unwrap();
        let rep = check_singular_weights(&l).unwrap();
        assert!(rep.all_pass());
        let e = find(&rep, "ledger.v_tilde.weight");
        assert_eq!(
            e.computed,
            CheckValue::WWeight {
                weight: vec![Rational::int(4)],
                conformal: q(5, 2)
            }
        );
    }

    #[test]
    fn psl22_v1() {
        let a = alg("psl2-2");
        let l = Level::new(&a, Rational::int(-2)).unwrap();
        let rep = check_singular_weights(&l).unwrap();
        // θ₁ = 2ω₁, so 2θ₁ has Dynkin label 4
        assert_eq!(
            find(&rep, "ledger.v.1.weight").computed,
            CheckValue::WWeight {
                weight: vec![Rational::int(4)],
                conformal: Rational::int(2)
            }
        );
        assert!(rep.all_pass());
    }

    #[test]
    fn affine_pairing_examples() {
        let a = alg("psl2-2");
        let rep = check_affine_pairings(&Level::new(&a, Rational::int(-2)).unwrap()).unwrap();
        assert_eq!(
            find(&rep, "ledger.lambda_prime.eta.1").computed,
            CheckValue::Scalar(Rational::one())
        );
        assert!(rep.all_pass());

        let g = alg("g3");
        let rep = check_affine_pairings(&Level::new(&g, q(-3, 2)).unwrap()).unwrap();
        assert_eq!(
            find(&rep, "ledger.lambda_triple.alpha1.1").computed,
            CheckValue::Scalar(q(5, 2))
        );
        assert!(rep.all_pass());

        let s = alg("spo2-3");
        let rep = check_affine_pairings(&Level::new(&s, q(-3, 4)).unwrap()).unwrap();
        // -k - 1/2 at k = -3/4
        assert_eq!(
            find(&rep, "ledger.spo23.mu.alpha01").computed,
            CheckValue::Scalar(q(1, 4))
        );
        assert!(rep.all_pass());
    }

    #[test]
    fn cone_examples() {
        let sol = |m, n, qn| match &check_d21_cone(m, n, qn).unwrap().entries[0].computed {
            CheckValue::Vector(v) => v.clone(),
            other => panic!("{other:?}"),
        };
        let ints = |v: &[i64]| v.iter().map(|&x| Rational::int(x)).collect::<Vec<_>>();
        assert_eq!(sol(2, 1, 1), ints(&[-1, 2, 2]));
        assert_eq!(sol(3, 2, 1), ints(&[-2, 3, 2]));
        assert_eq!(sol(5, 3, 2), ints(&[-6, 10, 8]));
        assert!(check_d21_cone(1, 2, 1).is_err());
        assert!(check_d21_cone(2, 2, 1).is_err());
    }

    #[test]
    fn zhu_lists() {
        let s = alg("spo2-3");
        let rep = check_zhu_consequences(&Level::new(&s, Rational::int(-1)).unwrap()).unwrap();
        assert_eq!(
            find(&rep, "ledger.zhu.list").computed,
            CheckValue::Text("(0,free) (1,1/4) (2,1/2)".into())
        );
        assert!(rep.all_pass());

        let rep = check_zhu_consequences(&Level::new(&s, q(-5, 4)).unwrap()).unwrap();
        assert_eq!(
            find(&rep, "ledger.zhu.a.2").computed,
            CheckValue::Scalar(q(1, 2))
        );
        assert_eq!(
            find(&rep, "ledger.zhu.a.3").computed,
            CheckValue::Scalar(q(3, 4))
        );

        let p = alg("psl2-2");
        let rep = check_zhu_consequences(&Level::new(&p, Rational::int(-2)).unwrap()).unwrap();
        assert_eq!(
            find(&rep, "ledger.zhu.list").computed,
            CheckValue::Text("(0,free) (1,1/2)".into())
        );

        let f = alg("f4");
        let l = Level::new(&f, q(-4, 3)).unwrap();
        assert!(matches!(
            check_zhu_consequences(&l),
            Err(Error::InvalidAlgebra(_))
        ));
    }

    #[test]
    fn run_all_green() {
        for s in [
            "psl2-2", "spo2-3", "spo2-5", "spo2-6", "d21-2-1", "d21-3-2", "d21-1-2", "f4", "g3",
        ] {
            let a = alg(s);
            let levels: Vec<_> = (1..=4)
                .map(|i| crate::algebra::tables::range_level(a.id, i))
                .collect();
            let rep = run_all(&a, &levels).unwrap();
            let bad: Vec<_> = rep.failures().map(|e| e.check_id.clone()).collect();
            assert!(bad.is_empty(), "{s}: {bad:?}");
        }
    }
}
