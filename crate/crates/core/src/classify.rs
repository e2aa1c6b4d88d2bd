//! Levels, the sets P⁺_k, extremal weights, the threshold A(k, ν), the
//! conformal weight ℓ₀(h), and the classification predicates for modules of
//! V_k(g) and W_k^min(g).
//!
//! `h` and `ℓ₀` are rational here. Every predicate is a polynomial identity
//! in them, so the same answers hold verbatim over ℂ.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::affine::{affine_pair, AffineWeight};
use crate::algebra::{tables, AlgebraData, AlgebraId, Weight};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// A non-critical level `k` of a catalog algebra.
#[derive(Debug, Clone)]
pub struct Level<'a> {
    alg: &'a AlgebraData,
    k: Rational,
    m: Vec<Rational>,
    in_range: bool,
}

impl<'a> Level<'a> {
    pub fn new(alg: &'a AlgebraData, k: Rational) -> Result<Self> {
        if k == -&alg.h_check {
            return Err(Error::CriticalLevel(k.to_string()));
        }
        let m: Vec<Rational> = alg
            .theta_i
            .iter()
            .zip(&alg.chi)
            .map(|(t, chi)| Ok(Rational::int(2) * &k / alg.pair(t, t)? + chi))
            .collect::<Result<_>>()?;
        let in_range = tables::in_range(alg.id, &k) && m.iter().all(Rational::is_nonneg_integer);
        Ok(Level {
            alg,
            k,
            m,
            in_range,
        })
    }

    pub fn alg(&self) -> &'a AlgebraData {
        self.alg
    }

    pub fn algebra(&self) -> AlgebraId {
        self.alg.id
    }

    pub fn k(&self) -> &Rational {
        &self.k
    }

    fn k_plus_h(&self) -> Rational {
        &self.k + &self.alg.h_check
    }

    /// `M_i(k) = 2k/(θ_i|θ_i) + χ_i`.
    pub fn m_values(&self) -> Vec<Rational> {
        self.m.clone()
    }

    /// `M_i(k) + χ_i`, the bound separating extremal from non-extremal weights.
    pub fn m_plus_chi(&self) -> Vec<Rational> {
        self.m_values()
            .into_iter()
            .zip(&self.alg.chi)
            .map(|(m, c)| m + c)
            .collect()
    }

    /// True iff `-k` is in the published unitarity range; every `M_i(k)` is then in ℤ₊.
    pub fn in_unitarity_range(&self) -> bool {
        self.in_range
    }

    pub fn require_range(&self) -> Result<()> {
        if self.in_unitarity_range() {
            Ok(())
        } else {
            Err(Error::OutOfRange {
                algebra: self.alg.id,
                k: self.k.to_string(),
            })
        }
    }

    fn m_integers(&self) -> Result<Vec<i64>> {
        self.require_range()?;
        Ok(self
            .m_values()
            .iter()
            .map(|m| m.to_i64().expect("integral in range"))
            .collect())
    }
}

/// A dominant integral weight of g^♮ in the fundamental-weight basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DominantWeight {
    coeffs: Vec<u32>,
    weight: Weight,
}

impl DominantWeight {
    pub fn new(alg: &AlgebraData, coeffs: Vec<u32>) -> Result<Self> {
        let n = alg.natural_fundamental.len();
        if coeffs.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: coeffs.len(),
            });
        }
        let weight = coeffs
            .iter()
            .zip(&alg.natural_fundamental)
            .fold(Weight::zero(alg.id), |acc, (c, w)| {
                &acc + &w.scale(&Rational::from(*c))
            });
        Ok(DominantWeight { coeffs, weight })
    }

    pub fn zero(alg: &AlgebraData) -> Self {
        DominantWeight::new(alg, vec![0; alg.natural_fundamental.len()]).expect("length matches")
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// `ν(θ_i^∨)` for each summand, from the comarks.
    pub fn theta_pairings(&self, alg: &AlgebraData) -> Vec<i64> {
        alg.comarks
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&self.coeffs)
                    .map(|(m, c)| *m as i64 * *c as i64)
                    .sum()
            })
            .collect()
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for DominantWeight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(s)
    }
}

/// All ν ∈ P⁺ with ν(θ_i^∨) ≤ M_i(k), in lexicographic order of coefficients.
pub fn enumerate_pk(level: &Level) -> Result<Vec<DominantWeight>> {
    let m = level.m_integers()?;
    let alg = level.alg;
    let n = alg.natural_fundamental.len();
    let bounds: Vec<u32> = (0..n)
        .map(|a| {
            let i = alg.natural_component(a);
            (m[i] / alg.comarks[i][a] as i64) as u32
        })
        .collect();

    let mut out = Vec::new();
    let mut c = vec![0u32; n];
    loop {
        let nu = DominantWeight::new(alg, c.clone())?;
        if nu.theta_pairings(alg).iter().zip(&m).all(|(p, mi)| p <= mi) {
            out.push(nu);
        }
        // odometer, last coordinate fastest
        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            if c[pos] < bounds[pos] {
                c[pos] += 1;
                c[pos + 1..].iter_mut().for_each(|x| *x = 0);
                break;
            }
        }
    }
}

pub fn in_pk(level: &Level, nu: &DominantWeight) -> bool {
    level.in_unitarity_range()
        && nu
            .theta_pairings(level.alg)
            .iter()
            .zip(level.m_values())
            .all(|(p, m)| Rational::int(*p) <= m)
}

fn require_pk(level: &Level, nu: &DominantWeight) -> Result<()> {
    level.require_range()?;
    if in_pk(level, nu) {
        Ok(())
    } else {
        Err(Error::NotInPk(nu.coeffs.clone()))
    }
}

/// True iff ν(θ_i^∨) > M_i(k) + χ_i for some i.
pub fn is_extremal(level: &Level, nu: &DominantWeight) -> Result<bool> {
    require_pk(level, nu)?;
    Ok(nu
        .theta_pairings(level.alg)
        .iter()
        .zip(level.m_plus_chi())
        .any(|(p, b)| Rational::int(*p) > b))
}

/// True iff ν + ξ ∉ P⁺_k, evaluated on ambient weights through coroot pairings.
pub fn is_extremal_by_shift(level: &Level, nu: &DominantWeight) -> Result<bool> {
    require_pk(level, nu)?;
    let alg = level.alg;
    let shifted = nu.weight() + &alg.xi;
    let dominant = alg.natural_simple.iter().all(|a| {
        alg.coroot_pair(&shifted, &a.weight)
            .map(|v| v.is_nonneg_integer())
            .unwrap_or(false)
    });
    let mut bounded = true;
    for (t, m) in alg.theta_i.iter().zip(level.m_values()) {
        bounded &= alg.coroot_pair(&shifted, t)? <= m;
    }
    Ok(!(dominant && bounded))
}

/// `(ξ|ν)`.
pub fn xi_pairing(level: &Level, nu: &DominantWeight) -> Rational {
    level
        .alg
        .pair(&level.alg.xi, nu.weight())
        .expect("same algebra")
}

/// A(k, ν) = (ν|ν+2ρ^♮)/(2(k+h^∨)) + (ξ|ν)((ξ|ν)-k-1)/(k+h^∨).
pub fn a_value(level: &Level, nu: &DominantWeight) -> Rational {
    let alg = level.alg;
    let kh = level.k_plus_h();
    let v = nu.weight();
    let casimir = alg
        .pair(v, &(v + &alg.rho_nat.scale(&Rational::int(2))))
        .expect("same algebra");
    let x = xi_pairing(level, nu);
    let shift = &x * &(&x - &level.k - Rational::one());
    casimir / (Rational::int(2) * &kh) + shift / kh
}

/// ν̂_h = kΛ₀ + hθ + ν.
pub fn nu_hat(level: &Level, nu: &DominantWeight, h: &Rational) -> AffineWeight {
    let alg = level.alg;
    AffineWeight::new(
        &alg.theta.scale(h) + nu.weight(),
        level.k.clone(),
        Rational::zero(),
    )
}

/// ρ̂ = ρ + h^∨Λ₀.
pub fn rho_hat(alg: &AlgebraData) -> AffineWeight {
    AffineWeight::new(alg.rho.clone(), alg.h_check.clone(), Rational::zero())
}

/// ℓ₀(h) = (ν̂_h|ν̂_h+2ρ̂)/(2(k+h^∨)) - h.
pub fn ell0(level: &Level, nu: &DominantWeight, h: &Rational) -> Rational {
    let alg = level.alg;
    let nh = nu_hat(level, nu, h);
    let s = &nh + &rho_hat(alg).scale(&Rational::int(2));
    let num = affine_pair(alg, &nh, &s).expect("same algebra");
    num / (Rational::int(2) * level.k_plus_h()) - h
}

/// E_{k,ν} = {(ξ|ν), k+1-(ξ|ν)}, collapsed to one element when they agree.
pub fn extremal_h_set(level: &Level, nu: &DominantWeight) -> Vec<Rational> {
    let x = xi_pairing(level, nu);
    let y = &level.k + Rational::one() - &x;
    if x == y {
        vec![x]
    } else {
        vec![x, y]
    }
}

/// Highest weight label ν̂_h of an irreducible V_k(g)-module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineModuleLabel {
    pub nu: DominantWeight,
    pub h: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Ell0 {
    Value(Rational),
    /// Any value; only meaningful for non-extremal ν.
    Free,
}

impl fmt::Display for Ell0 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ell0::Value(v) => write!(f, "{v}"),
            Ell0::Free => write!(f, "free"),
        }
    }
}

impl Serialize for Ell0 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Highest weight label (ν, ℓ₀) of an irreducible W_k^min(g)-module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WModuleLabel {
    pub nu: DominantWeight,
    pub ell0: Ell0,
}

/// Whether L(ν̂_h) is a V_k(g)-module.
pub fn affine_module_descends(level: &Level, label: &AffineModuleLabel) -> Result<bool> {
    level.require_range()?;
    if !in_pk(level, &label.nu) {
        return Ok(false);
    }
    if is_extremal(level, &label.nu)? {
        Ok(extremal_h_set(level, &label.nu).contains(&label.h))
    } else {
        Ok(true)
    }
}

/// Whether L^W(ν, ℓ₀) is a W_k^min(g)-module. In the unitarity range these are
/// also all irreducible positive energy modules.
pub fn w_module_exists(level: &Level, label: &WModuleLabel) -> Result<bool> {
    level.require_range()?;
    if !in_pk(level, &label.nu) {
        return Ok(false);
    }
    if !is_extremal(level, &label.nu)? {
        return Ok(true);
    }
    Ok(matches!(&label.ell0, Ell0::Value(v) if *v == a_value(level, &label.nu)))
}

/// H₀(L(ν̂_h)): zero when k - 2h ∈ ℤ₊, otherwise L^W(ν, ℓ₀(h)).
pub fn hamiltonian_reduce(level: &Level, label: &AffineModuleLabel) -> Option<WModuleLabel> {
    let t = &level.k - &(Rational::int(2) * &label.h);
    if t.is_nonneg_integer() {
        None
    } else {
        Some(WModuleLabel {
            nu: label.nu.clone(),
            ell0: Ell0::Value(ell0(level, &label.nu, &label.h)),
        })
    }
}

/// The necessary condition that fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Condition {
    /// M_i(k) ∈ ℤ₊
    C1a,
    /// ν(θ_i^∨) ≤ M_i(k)
    C1b,
    /// ℓ₀ ≥ A(k, ν), with equality when ν is extremal
    C1c,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::C1a => "1a",
            Condition::C1b => "1b",
            Condition::C1c => "1c",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Unitary,
    NotUnitary(Condition),
    OpenConjecture,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Unitary => f.write_str("unitary"),
            Verdict::NotUnitary(c) => write!(f, "not_unitary:{c}"),
            Verdict::OpenConjecture => f.write_str("open"),
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Extremal modules with ℓ₀ = A(k, ν) known to be unitary.
fn extremal_case_proven(level: &Level) -> bool {
    match level.algebra() {
        AlgebraId::Psl22 | AlgebraId::Spo2m(3) => true,
        AlgebraId::Spo2m(_) => *level.k() == Rational::int(-1),
        _ => false,
    }
}

/// Unitarity of L^W(ν, ℓ₀).
///
/// Outside the unitarity range only a failed necessary condition can be
/// reported; if all of them hold the call returns `OutOfRange`.
pub fn unitarity_verdict(level: &Level, label: &WModuleLabel) -> Result<Verdict> {
    let ell0 = match &label.ell0 {
        Ell0::Value(v) => v,
        Ell0::Free => return Err(Error::SymbolicEll0),
    };
    let nu = &label.nu;
    let m = level.m_values();
    if !m.iter().all(Rational::is_nonneg_integer) {
        return Ok(Verdict::NotUnitary(Condition::C1a));
    }
    let pairings = nu.theta_pairings(level.alg);
    if pairings
        .iter()
        .zip(&m)
        .any(|(p, mi)| Rational::int(*p) > *mi)
    {
        return Ok(Verdict::NotUnitary(Condition::C1b));
    }
    let extremal = pairings
        .iter()
        .zip(level.m_plus_chi())
        .any(|(p, b)| Rational::int(*p) > b);
    let a = a_value(level, nu);
    if *ell0 < a || (extremal && *ell0 != a) {
        return Ok(Verdict::NotUnitary(Condition::C1c));
    }
    level.require_range()?;
    if nu.is_zero() && ell0.is_zero() {
        return Ok(Verdict::Unitary);
    }
    let sufficient = level.m_plus_chi().iter().all(Rational::is_nonneg_integer) && !extremal;
    if sufficient {
        return Ok(Verdict::Unitary);
    }
    if extremal && extremal_case_proven(level) {
        return Ok(Verdict::Unitary);
    }
    Ok(Verdict::OpenConjecture)
}

/// One line of the W-algebra classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WClassEntry {
    pub label: WModuleLabel,
    pub extremal: bool,
    pub a: Rational,
    /// For `Ell0::Free` this is the verdict for every ℓ₀ ≥ A; smaller ℓ₀ fail 1c.
    pub verdict: Verdict,
}

/// All irreducible highest weight W_k^min(g)-modules, one entry per ν ∈ P⁺_k.
pub fn w_classification(level: &Level) -> Result<Vec<WClassEntry>> {
    enumerate_pk(level)?
        .into_iter()
        .map(|nu| {
            let extremal = is_extremal(level, &nu)?;
            let a = a_value(level, &nu);
            let verdict = unitarity_verdict(
                level,
                &WModuleLabel {
                    nu: nu.clone(),
                    ell0: Ell0::Value(a.clone()),
                },
            )?;
            let ell0 = if extremal {
                Ell0::Value(a.clone())
            } else {
                Ell0::Free
            };
            Ok(WClassEntry {
                label: WModuleLabel { nu, ell0 },
                extremal,
                a,
                verdict,
            })
        })
        .collect()
}

/// Allowed `h` for a given ν: every value, or a finite set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HValues {
    Free,
    Set(Vec<Rational>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineClassEntry {
    pub nu: DominantWeight,
    pub extremal: bool,
    pub h: HValues,
}

/// All irreducible highest weight V_k(g)-modules, one entry per ν ∈ P⁺_k.
pub fn affine_classification(level: &Level) -> Result<Vec<AffineClassEntry>> {
    enumerate_pk(level)?
        .into_iter()
        .map(|nu| {
            let extremal = is_extremal(level, &nu)?;
            let h = if extremal {
                HValues::Set(extremal_h_set(level, &nu))
            } else {
                HValues::Free
            };
            Ok(AffineClassEntry { nu, extremal, h })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::build_algebra;
    use crate::rational::q;

    fn alg(s: &str) -> AlgebraData {
        build_algebra(s.parse().unwrap()).unwrap()
    }

    fn nu(a: &AlgebraData, c: &[u32]) -> DominantWeight {
        DominantWeight::new(a, c.to_vec()).unwrap()
    }

    fn wl(a: &AlgebraData, c: &[u32], l: Rational) -> WModuleLabel {
        WModuleLabel {
            nu: nu(a, c),
            ell0: Ell0::Value(l),
        }
    }

    #[test]
    fn critical_level_rejected() {
        let a = alg("spo2-3");
        assert!(matches!(
            Level::new(&a, q(-1, 2)),
            Err(Error::CriticalLevel(_))
        ));
        let p = alg("psl2-2");
        assert!(Level::new(&p, Rational::zero()).is_err());
    }

    #[test]
    fn range_and_m() {
        let p = alg("psl2-2");
        let l = Level::new(&p, Rational::int(-2)).unwrap();
        assert!(l.in_unitarity_range());
        assert_eq!(l.m_values(), vec![Rational::one()]);

        let f = alg("f4");
        assert!(!Level::new(&f, q(-2, 3)).unwrap().in_unitarity_range());

        let s = alg("spo2-3");
        let l = Level::new(&s, q(-3, 4)).unwrap();
        assert!(l.in_unitarity_range());
        assert_eq!(l.m_values(), vec![Rational::one()]);

        let d = alg("d21-2-1");
        let l = Level::new(&d, q(-2, 3)).unwrap();
        assert_eq!(l.m_values(), vec![Rational::one(), Rational::zero()]);
    }

    #[test]
    fn pk_examples() {
        let s = alg("spo2-3");
        let l = Level::new(&s, Rational::int(-1)).unwrap();
        let got: Vec<_> = enumerate_pk(&l)
            .unwrap()
            .iter()
            .map(|n| n.coeffs().to_vec())
            .collect();
        assert_eq!(got, vec![vec![0], vec![1], vec![2]]);

        let p = alg("psl2-2");
        let l = Level::new(&p, Rational::int(-2)).unwrap();
        assert_eq!(enumerate_pk(&l).unwrap().len(), 2);

        let d = alg("d21-2-1");
        let l = Level::new(&d, q(-2, 3)).unwrap();
        let got: Vec<_> = enumerate_pk(&l)
            .unwrap()
            .iter()
            .map(|n| n.coeffs().to_vec())
            .collect();
        assert_eq!(got, vec![vec![0, 0], vec![1, 0]]);

        let l = Level::new(&d, q(-1, 3)).unwrap();
        assert!(matches!(enumerate_pk(&l), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn extremality_examples() {
        let s = alg("spo2-3");
        let l = Level::new(&s, Rational::int(-1)).unwrap();
        assert!(!is_extremal(&l, &nu(&s, &[0])).unwrap());
        assert!(is_extremal(&l, &nu(&s, &[1])).unwrap());
        assert!(matches!(
            is_extremal(&l, &nu(&s, &[3])),
            Err(Error::NotInPk(_))
        ));
        let l = Level::new(&s, q(-3, 4)).unwrap();
        assert!(is_extremal(&l, &nu(&s, &[0])).unwrap());
    }

    #[test]
    fn a_value_examples() {
        let s = alg("spo2-3");
        let l = Level::new(&s, Rational::int(-1)).unwrap();
        assert_eq!(a_value(&l, &nu(&s, &[0])), Rational::zero());
        assert_eq!(a_value(&l, &nu(&s, &[2])), q(1, 2));
        let p = alg("psl2-2");
        let l = Level::new(&p, Rational::int(-2)).unwrap();
        assert_eq!(a_value(&l, &nu(&p, &[1])), q(1, 2));
    }

    #[test]
    fn ell0_examples() {
        let s = alg("spo2-3");
        let l = Level::new(&s, Rational::int(-1)).unwrap();
        assert_eq!(ell0(&l, &nu(&s, &[0]), &Rational::zero()), Rational::zero());
        assert_eq!(ell0(&l, &nu(&s, &[1]), &q(-1, 4)), q(1, 4));
        assert_eq!(extremal_h_set(&l, &nu(&s, &[0])), vec![Rational::zero()]);
        assert_eq!(extremal_h_set(&l, &nu(&s, &[2])), vec![q(-1, 2), q(1, 2)]);
        let l5 = Level::new(&s, q(-5, 4)).unwrap();
        assert_eq!(
            extremal_h_set(&l5, &nu(&s, &[0])),
            vec![Rational::zero(), q(-1, 4)]
        );

        let p = alg("psl2-2");
        let l = Level::new(&p, Rational::int(-2)).unwrap();
        assert_eq!(extremal_h_set(&l, &nu(&p, &[1])), vec![q(-1, 2)]);
    }

    #[test]
    fn descent_examples() {
        let p = alg("psl2-2");
        let l = Level::new(&p, Rational::int(-2)).unwrap();
        let lab = |c: u32, h: Rational| AffineModuleLabel {
            nu: nu(&p, &[c]),
            h,
        };
        assert!(affine_module_descends(&l, &lab(0, Rational::int(5))).unwrap());
        assert!(!affine_module_descends(&l, &lab(1, Rational::zero())).unwrap());
        assert!(affine_module_descends(&l, &lab(1, q(-1, 2))).unwrap());
        assert!(!affine_module_descends(&l, &lab(2, q(-1, 2))).unwrap());
    }

    #[test]
    fn w_existence_examples() {
        let s = alg("spo2-3");
        let l = Level::new(&s, Rational::int(-1)).unwrap();
        assert!(w_module_exists(&l, &wl(&s, &[1], q(1, 4))).unwrap());
        assert!(!w_module_exists(&l, &wl(&s, &[1], Rational::zero())).unwrap());
        assert!(w_module_exists(&l, &wl(&s, &[0], Rational::int(7))).unwrap());
        let free = WModuleLabel {
            nu: nu(&s, &[0]),
            ell0: Ell0::Free,
        };
        assert!(w_module_exists(&l, &free).unwrap());
        let free = WModuleLabel {
            nu: nu(&s, &[1]),
            ell0: Ell0::Free,
        };
        assert!(!w_module_exists(&l, &free).unwrap());
    }

    #[test]
    fn reduction_examples() {
        let s = alg("spo2-3");
        let l = Level::new(&s, Rational::int(-1)).unwrap();
        let lab = |c: u32, h: Rational| AffineModuleLabel {
            nu: nu(&s, &[c]),
            h,
        };
        assert_eq!(hamiltonian_reduce(&l, &lab(0, q(-1, 2))), None);
        assert_eq!(
            hamiltonian_reduce(&l, &lab(0, Rational::zero())),
            Some(wl(&s, &[0], Rational::zero()))
        );
        assert_eq!(
            hamiltonian_reduce(&l, &lab(1, q(-1, 4))),
            Some(wl(&s, &[1], q(1, 4)))
        );
    }

    #[test]
    fn verdict_examples() {
        let s = alg("spo2-3");
        let l = Level::new(&s, Rational::int(-1)).unwrap();
        assert_eq!(
            unitarity_verdict(&l, &wl(&s, &[0], Rational::one())).unwrap(),
            Verdict::Unitary
        );
        assert_eq!(
            unitarity_verdict(&l, &wl(&s, &[2], Rational::zero())).unwrap(),
            Verdict::NotUnitary(Condition::C1c)
        );
        assert_eq!(
            unitarity_verdict(&l, &wl(&s, &[3], Rational::int(9))).unwrap(),
            Verdict::NotUnitary(Condition::C1b)
        );
        let free = WModuleLabel {
            nu: nu(&s, &[0]),
            ell0: Ell0::Free,
        };
        assert_eq!(unitarity_verdict(&l, &free), Err(Error::SymbolicEll0));

        let g = alg("g3");
        let l = Level::new(&g, q(-3, 2)).unwrap();
        let e = enumerate_pk(&l)
            .unwrap()
            .into_iter()
            .find(|n| is_extremal(&l, n).unwrap())
            .unwrap();
        let a = a_value(&l, &e);
        let lab = WModuleLabel {
            nu: e,
            ell0: Ell0::Value(a),
        };
        assert_eq!(
            unitarity_verdict(&l, &lab).unwrap(),
            Verdict::OpenConjecture
        );

        // off range: M = 3/2 fails integrality
        let p = alg("psl2-2");
        let l = Level::new(&p, q(-5, 2)).unwrap();
        assert_eq!(
            unitarity_verdict(&l, &wl(&p, &[0], Rational::one())).unwrap(),
            Verdict::NotUnitary(Condition::C1a)
        );
        let l = Level::new(&p, Rational::int(-1)).unwrap();
        assert_eq!(
            unitarity_verdict(&l, &wl(&p, &[0], Rational::one())).unwrap(),
            Verdict::NotUnitary(Condition::C1c)
        );
        assert!(matches!(
            unitarity_verdict(&l, &wl(&p, &[0], Rational::zero())),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn spo23_list_at_minus_one() {
        let s = alg("spo2-3");
        let l = Level::new(&s, Rational::int(-1)).unwrap();
        let got: Vec<(Vec<u32>, String)> = w_classification(&l)
            .unwrap()
            .into_iter()
            .map(|e| (e.label.nu.coeffs().to_vec(), e.label.ell0.to_string()))
            .collect();
        assert_eq!(
            got,
            vec![
                (vec![0], "free".into()),
                (vec![1], "1/4".into()),
                (vec![2], "1/2".into())
            ]
        );
    }
}
