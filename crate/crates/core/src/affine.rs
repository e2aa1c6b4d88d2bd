//! Affine weights `finite + c·Λ₀ + d·δ`, affine roots, simple root sets and
//! odd reflections.

use serde::Serialize;

use crate::algebra::{AlgebraData, AlgebraId, Parity, Weight};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::report::Report;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineWeight {
    pub finite: Weight,
    pub c_lambda0: Rational,
    pub c_delta: Rational,
}

impl AffineWeight {
    pub fn new(finite: Weight, c_lambda0: Rational, c_delta: Rational) -> Self {
        AffineWeight {
            finite,
            c_lambda0,
            c_delta,
        }
    }

    pub fn finite(finite: Weight) -> Self {
        AffineWeight {
            finite,
            c_lambda0: Rational::zero(),
            c_delta: Rational::zero(),
        }
    }

    pub fn lambda0(algebra: AlgebraId) -> Self {
        AffineWeight::new(Weight::zero(algebra), Rational::one(), Rational::zero())
    }

    pub fn delta(algebra: AlgebraId) -> Self {
        AffineWeight::new(Weight::zero(algebra), Rational::zero(), Rational::one())
    }

    pub fn algebra(&self) -> AlgebraId {
        self.finite.algebra()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        AffineWeight::new(self.finite.scale(c), &self.c_lambda0 * c, &self.c_delta * c)
    }
}

impl<'b> std::ops::Add<&'b AffineWeight> for &AffineWeight {
    type Output = AffineWeight;
    fn add(self, rhs: &'b AffineWeight) -> AffineWeight {
        AffineWeight::new(
            &self.finite + &rhs.finite,
            &self.c_lambda0 + &rhs.c_lambda0,
            &self.c_delta + &rhs.c_delta,
        )
    }
}

impl<'b> std::ops::Sub<&'b AffineWeight> for &AffineWeight {
    type Output = AffineWeight;
    fn sub(self, rhs: &'b AffineWeight) -> AffineWeight {
        AffineWeight::new(
            &self.finite - &rhs.finite,
            &self.c_lambda0 - &rhs.c_lambda0,
            &self.c_delta - &rhs.c_delta,
        )
    }
}

impl std::ops::Add for AffineWeight {
    type Output = AffineWeight;
    fn add(self, rhs: AffineWeight) -> AffineWeight {
        &self + &rhs
    }
}

impl std::ops::Sub for AffineWeight {
    type Output = AffineWeight;
    fn sub(self, rhs: AffineWeight) -> AffineWeight {
        &self - &rhs
    }
}

impl std::ops::Neg for &AffineWeight {
    type Output = AffineWeight;
    fn neg(self) -> AffineWeight {
        self.scale(&Rational::int(-1))
    }
}

/// Invariant form extended by `(Λ₀|δ) = 1`, `(Λ₀|Λ₀) = (δ|δ) = 0`, and Λ₀, δ orthogonal to h*.
pub fn affine_pair(alg: &AlgebraData, a: &AffineWeight, b: &AffineWeight) -> Result<Rational> {
    Ok(alg.pair(&a.finite, &b.finite)? + &a.c_lambda0 * &b.c_delta + &a.c_delta * &b.c_lambda0)
}

/// `λ(α^∨) = 2(λ|α)/(α|α)` for a non-isotropic affine root α.
pub fn affine_coroot_pair(
    alg: &AlgebraData,
    w: &AffineWeight,
    alpha: &AffineWeight,
) -> Result<Rational> {
    let norm = affine_pair(alg, alpha, alpha)?;
    if norm.is_zero() {
        return Err(Error::IsotropicRoot);
    }
    Ok(Rational::int(2) * affine_pair(alg, w, alpha)? / norm)
}

/// A real affine root `finite + delta_mult·δ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct AffineRoot {
    #[serde(rename = "coords")]
    pub finite: Weight,
    pub delta_mult: i64,
    pub parity: Parity,
}

impl AffineRoot {
    pub fn new(finite: Weight, delta_mult: i64, parity: Parity) -> Self {
        AffineRoot {
            finite,
            delta_mult,
            parity,
        }
    }

    pub fn weight(&self) -> AffineWeight {
        AffineWeight::new(
            self.finite.clone(),
            Rational::zero(),
            Rational::int(self.delta_mult),
        )
    }

    pub fn neg(&self) -> AffineRoot {
        AffineRoot::new(-&self.finite, -self.delta_mult, self.parity)
    }

    pub fn add(&self, other: &AffineRoot) -> AffineRoot {
        AffineRoot::new(
            &self.finite + &other.finite,
            self.delta_mult + other.delta_mult,
            self.parity + other.parity,
        )
    }

    pub fn is_isotropic(&self, alg: &AlgebraData) -> Result<bool> {
        Ok(alg.pair(&self.finite, &self.finite)?.is_zero())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct SimpleRootSet {
    pub roots: Vec<AffineRoot>,
}

impl SimpleRootSet {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, r: &AffineRoot) -> bool {
        self.roots.contains(r)
    }
}

/// `α₀ = δ - θ`.
pub fn alpha0(alg: &AlgebraData) -> AffineRoot {
    AffineRoot::new(-&alg.theta, 1, Parity::Even)
}

/// `η_i = δ - θ_i`.
pub fn eta(alg: &AlgebraData, i: usize) -> AffineRoot {
    AffineRoot::new(-&alg.theta_i[i], 1, Parity::Even)
}

/// Π̂ = {α₀, α₁, ..., α_n}.
pub fn affine_simple_roots(alg: &AlgebraData) -> SimpleRootSet {
    let mut roots = vec![alpha0(alg)];
    roots.extend(
        alg.simple_roots
            .iter()
            .map(|r| AffineRoot::new(r.weight.clone(), 0, r.parity)),
    );
    SimpleRootSet { roots }
}

/// Odd reflection at β: β ↦ -β in place, α ↦ α + β when (α|β) ≠ 0, other roots unchanged.
pub fn odd_reflect(
    alg: &AlgebraData,
    pi: &SimpleRootSet,
    beta: &AffineRoot,
) -> Result<SimpleRootSet> {
    if !pi.contains(beta) {
        return Err(Error::NotInRootSet);
    }
    if beta.parity != Parity::Odd || !beta.is_isotropic(alg)? {
        return Err(Error::NotOddIsotropic);
    }
    let bw = beta.weight();
    let roots = pi
        .roots
        .iter()
        .map(|a| {
            if a == beta {
                Ok(beta.neg())
            } else if affine_pair(alg, &a.weight(), &bw)?.is_zero() {
                Ok(a.clone())
            } else {
                Ok(a.add(beta))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SimpleRootSet { roots })
}

/// Π̂′ = r_{α₀+α₁} r_{α₁}(Π̂).
pub fn reflected_system(alg: &AlgebraData) -> Result<SimpleRootSet> {
    let pi = affine_simple_roots(alg);
    let a0 = pi.roots[0].clone();
    let a1 = pi.roots[1].clone();
    let step = odd_reflect(alg, &pi, &a1)?;
    odd_reflect(alg, &step, &a0.add(&a1))
}

/// Checks that every η_i lies in Π̂′.
pub fn eta_membership_check(alg: &AlgebraData) -> Report {
    let mut rep = Report::new();
    let name = alg.id.to_string();
    let reflected = reflected_system(alg);
    for i in 0..alg.theta_i.len() {
        let holds = match &reflected {
            Ok(set) => set.contains(&eta(alg, i)),
            Err(_) => false,
        };
        rep.push_holds(
            &format!("affine.eta.{}.member", i + 1),
            "η_i = δ - θ_i belongs to r_{α₀+α₁} r_{α₁}(Π̂)",
            &name,
            None,
            holds,
        );
    }
    rep
}
