//! Root data for the six families of Lie superalgebras whose minimal
//! W-algebras have non-collapsing unitary levels.
//!
//! Each [`AlgebraData`] is built from three ingredients:
//! - the invariant form on the ambient ε/δ basis,
//! - the chosen simple roots, highest root θ, the highest roots θ_i of the
//!   simple summands of g^♮ and the odd roots γ₁, γ₂,
//! - the positive root list, read from an embedded root file.
//!
//! Everything else (ρ, ρ^♮, ξ, χ_i, h^∨, fundamental weights of g^♮) is
//! computed from those, and [`AlgebraData::selfcheck`] compares the computed
//! constants against the published closed forms in [`tables`].
//!
//! g^♮ is semisimple in every family, so (h^♮)* is identified with the span
//! of its simple roots and restriction to h^♮ is orthogonal projection onto
//! that span.

pub mod rootdata;
pub mod tables;

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{solve_consistent, solve_linear, Matrix, Vector};
use crate::rational::{q, Rational};
use crate::report::Report;

use rootdata::{parse_expr, parse_roots, RootDataSource, SymbolTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraId {
    /// psl(2|2)
    Psl22,
    /// spo(2|m), m ≥ 3, m ≠ 4
    Spo2m(u32),
    /// D(2,1; m/n) with gcd(m, n) = 1
    D21(u32, u32),
    F4,
    G3,
}

impl AlgebraId {
    pub fn validate(self) -> Result<Self> {
        match self {
            AlgebraId::Spo2m(m) if m < 3 => Err(Error::InvalidAlgebra(format!(
                "spo(2|{m}) is not in the catalog (need m >= 3)"
            ))),
            AlgebraId::Spo2m(4) => Err(Error::InvalidAlgebra(
                "spo(2|4) has no unitarity range in the catalog".into(),
            )),
            AlgebraId::D21(m, n) if m == 0 || n == 0 => Err(Error::InvalidAlgebra(format!(
                "D(2,1;{m}/{n}) needs positive m, n"
            ))),
            AlgebraId::D21(m, n) if m.gcd(&n) != 1 => Err(Error::InvalidAlgebra(format!(
                "D(2,1;{m}/{n}) needs coprime m, n"
            ))),
            id => Ok(id),
        }
    }

    /// Size of the ε block (the index range of `e{i}` in root files).
    pub fn eps_rank(self) -> usize {
        match self {
            AlgebraId::Psl22 => 2,
            AlgebraId::Spo2m(m) => (m / 2) as usize,
            AlgebraId::D21(..) | AlgebraId::F4 => 3,
            AlgebraId::G3 => 2,
        }
    }

    pub fn coord_labels(self) -> Vec<String> {
        let eps = (1..=self.eps_rank()).map(|i| format!("e{i}"));
        let deltas: &[&str] = match self {
            AlgebraId::Psl22 => &["d1", "d2"],
            AlgebraId::D21(..) => &[],
            _ => &["d1"],
        };
        eps.chain(deltas.iter().map(|s| s.to_string())).collect()
    }

    pub fn dim(self) -> usize {
        self.coord_labels().len()
    }

    /// |S|, the number of simple summands of g^♮.
    pub fn summands(self) -> usize {
        match self {
            AlgebraId::D21(..) => 2,
            _ => 1,
        }
    }

    pub fn family_file(self) -> &'static str {
        match self {
            AlgebraId::Psl22 => "psl2-2",
            AlgebraId::Spo2m(m) if m % 2 == 1 => "spo2-odd",
            AlgebraId::Spo2m(_) => "spo2-even",
            AlgebraId::D21(..) => "d21",
            AlgebraId::F4 => "f4",
            AlgebraId::G3 => "g3",
        }
    }

    pub fn gram(self) -> Matrix {
        let diag = |v: Vec<Rational>| Matrix::diagonal(&v);
        match self {
            AlgebraId::Psl22 => diag(vec![
                Rational::one(),
                Rational::one(),
                Rational::int(-1),
                Rational::int(-1),
            ]),
            AlgebraId::Spo2m(_) => {
                let mut d = vec![q(-1, 2); self.eps_rank()];
                d.push(q(1, 2));
                diag(d)
            }
            AlgebraId::D21(m, n) => {
                let (m, n) = (m as i64, n as i64);
                diag(vec![q(1, 2), q(-n, 2 * (m + n)), q(-m, 2 * (m + n))])
            }
            AlgebraId::F4 => diag(vec![q(-2, 3), q(-2, 3), q(-2, 3), Rational::int(2)]),
            AlgebraId::G3 => Matrix::from_rows(vec![
                vec![q(-1, 2), q(1, 4), Rational::zero()],
                vec![q(1, 4), q(-1, 2), Rational::zero()],
                vec![Rational::zero(), Rational::zero(), q(1, 2)],
            ])
            .expect("square"),
        }
    }
}

impl SymbolTable for AlgebraId {
    fn resolve(&self, symbol: &str) -> Option<Vector> {
        let dim = self.dim();
        let unit = |pos: usize| {
            let mut v = vec![Rational::zero(); dim];
            v[pos] = Rational::one();
            v
        };
        if *self == AlgebraId::G3 && symbol == "e3" {
            let mut v = vec![Rational::zero(); dim];
            v[0] = Rational::int(-1);
            v[1] = Rational::int(-1);
            return Some(v);
        }
        self.coord_labels()
            .iter()
            .position(|l| l == symbol)
            .map(unit)
    }

    fn dim(&self) -> usize {
        AlgebraId::dim(*self)
    }

    fn rank(&self) -> usize {
        self.eps_rank()
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraId::Psl22 => write!(f, "psl2-2"),
            AlgebraId::Spo2m(m) => write!(f, "spo2-{m}"),
            AlgebraId::D21(m, n) => write!(f, "d21-{m}-{n}"),
            AlgebraId::F4 => write!(f, "f4"),
            AlgebraId::G3 => write!(f, "g3"),
        }
    }
}

/// Parses `psl2-2`, `spo2-<m>`, `d21-<m>-<n>`, `f4`, `g3` and validates the result.
impl FromStr for AlgebraId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidAlgebra(format!("unknown algebra name {s:?}"));
        let num = |t: &str| t.parse::<u32>().map_err(|_| bad());
        let id = match s {
            "psl2-2" => AlgebraId::Psl22,
            "f4" => AlgebraId::F4,
            "g3" => AlgebraId::G3,
            _ => {
                if let Some(m) = s.strip_prefix("spo2-") {
                    AlgebraId::Spo2m(num(m)?)
                } else if let Some(rest) = s.strip_prefix("d21-") {
                    let (m, n) = rest.split_once('-').ok_or_else(bad)?;
                    AlgebraId::D21(num(m)?, num(n)?)
                } else {
                    return Err(bad());
                }
            }
        };
        id.validate()
    }
}

impl Serialize for AlgebraId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for AlgebraId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }
}

/// Parity of a sum of two roots.
impl Add for Parity {
    type Output = Parity;
    fn add(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// A finite weight in ambient coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight {
    algebra: AlgebraId,
    coords: Vector,
}

impl Weight {
    pub fn new(algebra: AlgebraId, coords: Vector) -> Result<Self> {
        if coords.len() != algebra.dim() {
            return Err(Error::DimensionMismatch {
                expected: algebra.dim(),
                found: coords.len(),
            });
        }
        Ok(Weight { algebra, coords })
    }

    pub fn zero(algebra: AlgebraId) -> Self {
        Weight {
            algebra,
            coords: vec![Rational::zero(); algebra.dim()],
        }
    }

    pub fn algebra(&self) -> AlgebraId {
        self.algebra
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Weight {
        Weight {
            algebra: self.algebra,
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    fn zip_with(&self, other: &Weight, f: impl Fn(&Rational, &Rational) -> Rational) -> Weight {
        assert_eq!(self.algebra, other.algebra, "weights of different algebras");
        Weight {
            algebra: self.algebra,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords.serialize(s)
    }
}

impl<'b> Add<&'b Weight> for &Weight {
    type Output = Weight;
    fn add(self, rhs: &'b Weight) -> Weight {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        &self + &rhs
    }
}

impl<'b> Sub<&'b Weight> for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &'b Weight) -> Weight {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        &self - &rhs
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight {
            algebra: self.algebra,
            coords: self.coords.iter().map(|x| -x).collect(),
        }
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        -&self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Root {
    #[serde(rename = "coords")]
    pub weight: Weight,
    pub parity: Parity,
}

/// The published choices for one family: simple roots in order, θ, θ_i, γ₁, γ₂.
struct TableRow {
    simple: Vec<String>,
    theta: String,
    theta_nat: Vec<String>,
    gamma1: Vec<String>,
    gamma2: Vec<String>,
}

fn table_row(id: AlgebraId) -> TableRow {
    let s = |v: &[&str]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    match id {
        AlgebraId::Psl22 => TableRow {
            simple: s(&["e1-d1", "d1-d2", "d2-e2"]),
            theta: "e1-e2".into(),
            theta_nat: s(&["d1-d2"]),
            gamma1: s(&["e1-d2"]),
            gamma2: s(&["d1-e2"]),
        },
        AlgebraId::Spo2m(m) => {
            let r = id.eps_rank();
            let mut simple = vec!["d1-e1".to_string()];
            simple.extend((1..r).map(|i| format!("e{i}-e{}", i + 1)));
            if m % 2 == 1 {
                simple.push(format!("e{r}"));
            } else {
                simple.push(format!("e{}+e{r}", r - 1));
            }
            let (theta_nat, gamma2) = if m == 3 {
                ("e1", "d1")
            } else {
                ("e1+e2", "d1+e2")
            };
            TableRow {
                simple,
                theta: "2*d1".into(),
                theta_nat: s(&[theta_nat]),
                gamma1: s(&["d1+e1"]),
                gamma2: s(&[gamma2]),
            }
        }
        AlgebraId::D21(..) => TableRow {
            simple: s(&["e1-e2-e3", "2*e2", "2*e3"]),
            theta: "2*e1".into(),
            theta_nat: s(&["2*e2", "2*e3"]),
            gamma1: s(&["e1+e2-e3", "e1+e2+e3"]),
            gamma2: s(&["e1+e2+e3", "e1-e2+e3"]),
        },
        AlgebraId::F4 => TableRow {
            simple: s(&["1/2*d1-1/2*e1-1/2*e2-1/2*e3", "e3", "e2-e3", "e1-e2"]),
            theta: "d1".into(),
            theta_nat: s(&["e1+e2"]),
            gamma1: s(&["1/2*d1+1/2*e1+1/2*e2-1/2*e3"]),
            gamma2: s(&["1/2*d1+1/2*e1+1/2*e2+1/2*e3"]),
        },
        AlgebraId::G3 => TableRow {
            simple: s(&["d1+e3", "e1", "e2-e1"]),
            theta: "2*d1".into(),
            theta_nat: s(&["e2-e3"]),
            gamma1: s(&["d1-e3"]),
            gamma2: s(&["d1+e2"]),
        },
    }
}

/// Complete static description of one catalog algebra.
#[derive(Debug, Clone, Serialize)]
pub struct AlgebraData {
    pub id: AlgebraId,
    pub coord_labels: Vec<String>,
    pub gram: Matrix,
    pub simple_roots: Vec<Root>,
    pub positive_roots: Vec<Root>,
    pub theta: Weight,
    pub theta_i: Vec<Weight>,
    pub xi: Weight,
    pub rho: Weight,
    pub rho_nat: Weight,
    pub h_check: Rational,
    pub chi: Vec<Rational>,
    pub gamma1: Vec<Weight>,
    pub gamma2: Vec<Weight>,
    pub natural_simple: Vec<Root>,
    pub natural_fundamental: Vec<Weight>,
    /// `comarks[i][a] = ω_a(θ_i^∨)`; zero when α_a is not in summand i.
    pub comarks: Vec<Vec<u32>>,
}

pub fn build_algebra(id: AlgebraId) -> Result<AlgebraData> {
    build_algebra_with(id, &RootDataSource::Embedded)
}

pub fn build_algebra_with(id: AlgebraId, source: &RootDataSource) -> Result<AlgebraData> {
    let id = id.validate()?;
    let gram = id.gram();
    let text = source.load(id.family_file())?;
    let positive_roots: Vec<Root> = parse_roots(&text, id.family_file(), &id)?
        .into_iter()
        .map(|l| Root {
            weight: Weight {
                algebra: id,
                coords: l.coords,
            },
            parity: l.parity,
        })
        .collect();

    let expr = |e: &str| -> Result<Weight> {
        Ok(Weight {
            algebra: id,
            coords: parse_expr(e, &id, &[])?,
        })
    };
    let row = table_row(id);

    let mut simple_roots = Vec::with_capacity(row.simple.len());
    for e in &row.simple {
        let w = expr(e)?;
        let parity = positive_roots
            .iter()
            .find(|r| r.weight == w)
            .map(|r| r.parity)
            .ok_or_else(|| {
                Error::RootData(format!("simple root {e} missing from positive roots"))
            })?;
        simple_roots.push(Root { weight: w, parity });
    }
    let theta = expr(&row.theta)?;
    let theta_i = row
        .theta_nat
        .iter()
        .map(|e| expr(e))
        .collect::<Result<Vec<_>>>()?;
    let gamma1 = row
        .gamma1
        .iter()
        .map(|e| expr(e))
        .collect::<Result<Vec<_>>>()?;
    let gamma2 = row
        .gamma2
        .iter()
        .map(|e| expr(e))
        .collect::<Result<Vec<_>>>()?;

    let mut alg = AlgebraData {
        id,
        coord_labels: id.coord_labels(),
        gram,
        natural_simple: Vec::new(),
        simple_roots,
        xi: Weight::zero(id),
        rho: Weight::zero(id),
        rho_nat: Weight::zero(id),
        h_check: Rational::zero(),
        chi: Vec::new(),
        natural_fundamental: Vec::new(),
        comarks: Vec::new(),
        positive_roots,
        theta,
        theta_i,
        gamma1,
        gamma2,
    };

    let mut natural = Vec::new();
    for r in &alg.simple_roots {
        if alg.pair(&r.weight, &alg.theta)?.is_zero() {
            natural.push(r.clone());
        }
    }
    alg.natural_simple = natural;

    let half = q(1, 2);
    let mut rho = Weight::zero(id);
    let mut rho_nat = Weight::zero(id);
    for r in &alg.positive_roots {
        let w = r.weight.scale(&half);
        rho = match r.parity {
            Parity::Even => &rho + &w,
            Parity::Odd => &rho - &w,
        };
        if alg.pair(&r.weight, &alg.theta)?.is_zero() {
            rho_nat = &rho_nat + &w;
        }
    }
    alg.rho = rho;
    alg.rho_nat = rho_nat;
    alg.h_check = Rational::one() + alg.pair(&alg.rho, &alg.theta)?;

    let alpha1 = alg.simple_roots[0].weight.clone();
    alg.xi = -alg.project_natural(&alpha1)?;
    alg.chi = alg
        .theta_i
        .iter()
        .map(|t| alg.coroot_pair(&alg.xi, t).map(|v| -v))
        .collect::<Result<_>>()?;

    alg.natural_fundamental = alg.solve_fundamental_weights()?;
    let mut comarks = Vec::with_capacity(alg.theta_i.len());
    for t in &alg.theta_i {
        let mut row = Vec::with_capacity(alg.natural_fundamental.len());
        for w in &alg.natural_fundamental {
            let c = alg.coroot_pair(w, t)?;
            let c = c
                .to_i64()
                .and_then(|c| u32::try_from(c).ok())
                .ok_or_else(|| Error::RootData(format!("non-integral comark {c}")))?;
            row.push(c);
        }
        comarks.push(row);
    }
    alg.comarks = comarks;
    Ok(alg)
}

impl AlgebraData {
    fn check_same(&self, w: &Weight) -> Result<()> {
        if w.algebra != self.id {
            return Err(Error::AlgebraMismatch(self.id, w.algebra));
        }
        Ok(())
    }

    /// The invariant form `(a|b)`.
    pub fn pair(&self, a: &Weight, b: &Weight) -> Result<Rational> {
        self.check_same(a)?;
        self.check_same(b)?;
        self.gram.bilinear(&a.coords, &b.coords)
    }

    /// `w(α^∨) = 2(w|α)/(α|α)`.
    pub fn coroot_pair(&self, w: &Weight, alpha: &Weight) -> Result<Rational> {
        let norm = self.pair(alpha, alpha)?;
        if norm.is_zero() {
            return Err(Error::IsotropicRoot);
        }
        Ok(Rational::int(2) * self.pair(w, alpha)? / norm)
    }

    pub fn weight(&self, coords: Vector) -> Result<Weight> {
        Weight::new(self.id, coords)
    }

    /// Builds a weight from an expression over the coordinate symbols, e.g. `d1-e1`.
    pub fn weight_from_expr(&self, expr: &str) -> Result<Weight> {
        Ok(Weight {
            algebra: self.id,
            coords: parse_expr(expr, &self.id, &[])?,
        })
    }

    pub fn alpha1(&self) -> &Weight {
        &self.simple_roots[0].weight
    }

    fn natural_gram(&self) -> Result<Matrix> {
        let n = self.natural_simple.len();
        let mut g = Matrix::zeros(n, n);
        for (i, a) in self.natural_simple.iter().enumerate() {
            for (j, b) in self.natural_simple.iter().enumerate() {
                g.set(i, j, self.pair(&a.weight, &b.weight)?);
            }
        }
        Ok(g)
    }

    /// Coefficients of the restriction of `w` to h^♮ in the Π^♮ basis.
    pub fn natural_coefficients(&self, w: &Weight) -> Result<Vector> {
        let rhs = self
            .natural_simple
            .iter()
            .map(|a| self.pair(w, &a.weight))
            .collect::<Result<Vec<_>>>()?;
        solve_linear(&self.natural_gram()?, &rhs)
    }

    /// Restriction of `w` to h^♮ as an ambient weight.
    pub fn project_natural(&self, w: &Weight) -> Result<Weight> {
        let c = self.natural_coefficients(w)?;
        let mut out = Weight::zero(self.id);
        for (ci, a) in c.iter().zip(&self.natural_simple) {
            out = &out + &a.weight.scale(ci);
        }
        Ok(out)
    }

    fn solve_fundamental_weights(&self) -> Result<Vec<Weight>> {
        let n = self.natural_simple.len();
        // cartan[c][b] = α_b(α_c^∨)
        let mut cartan = Matrix::zeros(n, n);
        for (c, ac) in self.natural_simple.iter().enumerate() {
            for (b, ab) in self.natural_simple.iter().enumerate() {
                cartan.set(c, b, self.coroot_pair(&ab.weight, &ac.weight)?);
            }
        }
        (0..n)
            .map(|a| {
                let e: Vector = (0..n)
                    .map(|i| {
                        if i == a {
                            Rational::one()
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect();
                let coef = solve_linear(&cartan, &e)?;
                Ok(coef
                    .iter()
                    .zip(&self.natural_simple)
                    .fold(Weight::zero(self.id), |acc, (c, r)| {
                        &acc + &r.weight.scale(c)
                    }))
            })
            .collect()
    }

    /// Fundamental weights ω_a of g^♮, dual to the coroots of Π^♮.
    pub fn fundamental_weights(&self) -> &[Weight] {
        &self.natural_fundamental
    }

    /// Index i ∈ S of the summand containing natural simple root `a`.
    pub fn natural_component(&self, a: usize) -> usize {
        (0..self.comarks.len())
            .find(|&i| self.comarks[i][a] > 0)
            .unwrap_or(0)
    }

    pub fn find_positive_root(&self, w: &Weight) -> Option<&Root> {
        self.positive_roots.iter().find(|r| &r.weight == w)
    }

    /// True iff `w` or `-w` is a positive root.
    pub fn is_root(&self, w: &Weight) -> bool {
        self.find_positive_root(w).is_some() || self.find_positive_root(&-w).is_some()
    }

    /// Expresses `w` in the basis Π.
    pub fn simple_coefficients(&self, w: &Weight) -> Result<Vector> {
        self.check_same(w)?;
        let cols: Vec<Vector> = self
            .simple_roots
            .iter()
            .map(|r| r.weight.coords.clone())
            .collect();
        solve_consistent(&Matrix::from_columns(&cols)?, &w.coords)
    }

    /// Verifies every structural invariant and compares computed constants
    /// with the published ones. Failures are report entries, never errors.
    pub fn selfcheck(&self) -> Report {
        let mut rep = Report::new();
        let id = self.id;
        let name = id.to_string();
        let pair = |a: &Weight, b: &Weight| self.pair(a, b).unwrap_or_else(|_| Rational::int(-999));

        rep.push(
            "catalog.theta.norm",
            "(θ|θ) = 2",
            &name,
            None,
            Rational::int(2),
            pair(&self.theta, &self.theta),
        );

        rep.push(
            "catalog.h_check",
            "h^∨ = 1 + (ρ|θ) matches the published value",
            &name,
            None,
            tables::dual_coxeter(id),
            self.h_check.clone(),
        );

        rep.push(
            "catalog.chi",
            "χ_i = -ξ(θ_i^∨) matches the published value",
            &name,
            None,
            tables::chi(id),
            self.chi.clone(),
        );

        let a1 = self.alpha1();
        rep.push_holds(
            "catalog.alpha1",
            "α₁ is odd isotropic with (θ|α₁) = 1",
            &name,
            None,
            self.simple_roots[0].parity == Parity::Odd
                && pair(a1, a1).is_zero()
                && pair(&self.theta, a1) == Rational::one(),
        );

        let xi_restriction = self.project_natural(a1).map(|p| -p) == Ok(self.xi.clone());
        rep.push_holds(
            "catalog.xi.restriction",
            "ξ = -α₁ restricted to h^♮",
            &name,
            None,
            xi_restriction,
        );

        let xi_dominant = self.natural_simple.iter().all(|a| {
            self.coroot_pair(&self.xi, &a.weight)
                .map(|v| v.is_nonneg_integer())
                .unwrap_or(false)
        });
        rep.push_holds(
            "catalog.xi.dominant",
            "ξ is dominant integral for g^♮",
            &name,
            None,
            xi_dominant,
        );

        for (i, t) in self.theta_i.iter().enumerate() {
            let diff = &(&self.theta - &self.gamma1[i]) - &self.gamma2[i];
            rep.push(
                &format!("catalog.gamma.{}", i + 1),
                "θ - γ₁ - γ₂ = -θ_i",
                &name,
                None,
                (-t).coords.clone(),
                diff.coords.clone(),
            );
            let odd_positive = |g: &Weight| {
                self.find_positive_root(g)
                    .map(|r| r.parity == Parity::Odd)
                    .unwrap_or(false)
            };
            rep.push_holds(
                &format!("catalog.gamma.{}.odd", i + 1),
                "γ₁, γ₂ are odd positive roots",
                &name,
                None,
                odd_positive(&self.gamma1[i]) && odd_positive(&self.gamma2[i]),
            );
        }

        let grading_ok = self.positive_roots.iter().all(|r| {
            let t = pair(&r.weight, &self.theta);
            match r.parity {
                Parity::Odd => t == Rational::one(),
                Parity::Even => t.is_zero() || (t == Rational::int(2) && r.weight == self.theta),
            }
        });
        rep.push_holds(
            "catalog.parity.grading",
            "odd positive roots have (α|θ) = 1; even ones 0, except θ",
            &name,
            None,
            grading_ok,
        );

        let closure_ok = self
            .positive_roots
            .iter()
            .all(|r| self.find_positive_root(&-&r.weight).is_none());
        rep.push_holds(
            "catalog.positive.closure",
            "-α ∉ Δ⁺ for α ∈ Δ⁺",
            &name,
            None,
            closure_ok,
        );

        let span_ok = self.positive_roots.iter().all(|r| {
            self.simple_coefficients(&r.weight)
                .map(|c| c.iter().all(Rational::is_nonneg_integer))
                .unwrap_or(false)
        });
        rep.push_holds(
            "catalog.positive.span",
            "every positive root is a nonnegative integer combination of Π",
            &name,
            None,
            span_ok,
        );

        let theta_highest = self.find_positive_root(&self.theta).map(|r| r.parity)
            == Some(Parity::Even)
            && self
                .simple_roots
                .iter()
                .all(|a| !self.is_root(&(&self.theta + &a.weight)));
        rep.push_holds(
            "catalog.theta.highest",
            "θ is the highest root",
            &name,
            None,
            theta_highest,
        );

        let natural_positive: Vec<&Root> = self
            .positive_roots
            .iter()
            .filter(|r| pair(&r.weight, &self.theta).is_zero())
            .collect();
        let natural_even = natural_positive.iter().all(|r| r.parity == Parity::Even)
            && self.natural_simple.iter().all(|r| r.parity == Parity::Even);
        let natural_span = natural_positive.iter().all(|r| {
            self.natural_coefficients(&r.weight)
                .map(|c| c.iter().all(Rational::is_nonneg_integer))
                .unwrap_or(false)
        });
        rep.push_holds(
            "catalog.natural.simple",
            "Π^♮ = Π ∩ Δ^♮ is a simple system for the even roots orthogonal to θ",
            &name,
            None,
            natural_even && natural_span && !self.natural_simple.is_empty(),
        );

        for (i, t) in self.theta_i.iter().enumerate() {
            let highest = natural_positive.iter().any(|r| &r.weight == t)
                && self
                    .natural_simple
                    .iter()
                    .all(|a| !self.is_root(&(t + &a.weight)));
            rep.push_holds(
                &format!("catalog.theta_i.{}.highest", i + 1),
                "θ_i is the highest root of its summand",
                &name,
                None,
                highest,
            );
        }

        let rho_nat_ok = self.natural_simple.iter().all(|a| {
            self.coroot_pair(&self.rho_nat, &a.weight)
                .map(|v| v == Rational::one())
                .unwrap_or(false)
        });
        rep.push_holds(
            "catalog.rho_nat",
            "ρ^♮(α^∨) = 1 on Π^♮",
            &name,
            None,
            rho_nat_ok,
        );

        rep.push(
            "catalog.rho.restriction",
            "ρ restricted to h^♮ equals ρ^♮",
            &name,
            None,
            self.rho_nat.coords.clone(),
            self.project_natural(&self.rho)
                .map(|w| w.coords)
                .unwrap_or_default(),
        );

        let dual_ok = self.natural_fundamental.iter().enumerate().all(|(a, w)| {
            pair(w, &self.theta).is_zero()
                && self.natural_simple.iter().enumerate().all(|(b, r)| {
                    let want = if a == b {
                        Rational::one()
                    } else {
                        Rational::zero()
                    };
                    self.coroot_pair(w, &r.weight)
                        .map(|v| v == want)
                        .unwrap_or(false)
                })
        });
        rep.push_holds(
            "catalog.fundamental",
            "ω_a(α_b^∨) = δ_ab and (ω_a|θ) = 0",
            &name,
            None,
            dual_ok,
        );

        let comarks_ok = self.comarks.len() == self.theta_i.len()
            && (0..self.natural_simple.len())
                .all(|a| self.comarks.iter().filter(|row| row[a] > 0).count() == 1);
        rep.push_holds(
            "catalog.comarks",
            "each simple root of g^♮ lies in exactly one summand with positive comark",
            &name,
            None,
            comarks_ok,
        );

        rep
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(s: &str) -> AlgebraData {
        build_algebra(s.parse().unwrap()).unwrap()
    }

    fn w(a: &AlgebraData, e: &str) -> Weight {
        a.weight_from_expr(e).unwrap()
    }

    #[test]
    fn names_roundtrip_and_validation() {
        for s in [
            "psl2-2", "spo2-3", "spo2-5", "spo2-6", "d21-2-1", "d21-1-1", "f4", "g3",
        ] {
            assert_eq!(s.parse::<AlgebraId>().unwrap().to_string(), s);
        }
        for s in [
            "spo2-4", "spo2-2", "d21-2-2", "d21-0-1", "e8", "spo2-x", "d21-3",
        ] {
            assert!(s.parse::<AlgebraId>().is_err(), "{s} should be rejected");
        }
        assert!(build_algebra(AlgebraId::Spo2m(4)).is_err());
        assert!(build_algebra(AlgebraId::D21(4, 2)).is_err());
    }

    #[test]
    fn psl22_gram_and_theta() {
        let a = alg("psl2-2");
        assert_eq!(a.gram, Matrix::diagonal(&[1, 1, -1, -1].map(Rational::int)));
        assert_eq!(a.theta, w(&a, "e1-e2"));
        assert_eq!(a.h_check, Rational::zero());
    }

    #[test]
    fn spo23_constants() {
        let a = alg("spo2-3");
        assert_eq!(a.h_check, q(1, 2));
        assert_eq!(a.chi, vec![Rational::int(-2)]);
        assert_eq!(a.pair(&w(&a, "e1"), &w(&a, "e1")).unwrap(), q(-1, 2));
        assert_eq!(a.natural_fundamental, vec![w(&a, "1/2*e1")]);
        assert_eq!(a.xi, w(&a, "e1"));
    }

    #[test]
    fn d21_two_summands() {
        let a = alg("d21-3-2");
        assert_eq!(a.theta_i, vec![w(&a, "2*e2"), w(&a, "2*e3")]);
        assert_eq!(a.natural_fundamental, vec![w(&a, "e2"), w(&a, "e3")]);
        assert_eq!(a.comarks, vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(a.chi, vec![Rational::int(-1); 2]);
    }

    #[test]
    fn f4_pairings() {
        let a = alg("f4");
        assert_eq!(
            a.pair(&w(&a, "e1"), &w(&a, "e2")).unwrap(),
            Rational::zero()
        );
        assert_eq!(a.pair(&w(&a, "e1"), &w(&a, "e1")).unwrap(), q(-2, 3));
        assert_eq!(a.h_check, Rational::int(-2));
        // B3 highest root ε1+ε2 has comarks 1, 2, 1 over (ε3, ε2-ε3, ε1-ε2)
        assert_eq!(a.comarks, vec![vec![1, 2, 1]]);
    }

    #[test]
    fn g3_eliminates_eps3() {
        let a = alg("g3");
        assert_eq!(w(&a, "e1+e2+e3"), Weight::zero(AlgebraId::G3));
        assert_eq!(a.h_check, q(-3, 2));
        assert_eq!(a.comarks, vec![vec![1, 2]]);
    }

    #[test]
    fn theta_has_norm_two_everywhere() {
        for s in [
            "psl2-2", "spo2-3", "spo2-7", "spo2-8", "d21-5-3", "f4", "g3",
        ] {
            let a = alg(s);
            assert_eq!(a.pair(&a.theta, &a.theta).unwrap(), Rational::int(2), "{s}");
        }
    }

    #[test]
    fn coroot_pairings() {
        let a = alg("spo2-3");
        let om = &a.natural_fundamental[0];
        assert_eq!(a.coroot_pair(om, &a.theta_i[0]).unwrap(), Rational::one());
        assert_eq!(
            a.coroot_pair(&a.theta_i[0], &a.theta_i[0]).unwrap(),
            Rational::int(2)
        );
        assert_eq!(a.coroot_pair(om, a.alpha1()), Err(Error::IsotropicRoot));

        let p = alg("psl2-2");
        let om = w(&p, "1/2*d1-1/2*d2");
        assert_eq!(p.natural_fundamental[0], om);
        assert_eq!(p.coroot_pair(&om, &p.theta_i[0]).unwrap(), Rational::one());
    }

    #[test]
    fn pairing_rejects_foreign_weights() {
        let a = alg("f4");
        let b = alg("g3");
        assert!(matches!(
            a.pair(&a.theta, &b.theta),
            Err(Error::AlgebraMismatch(..))
        ));
    }

    #[test]
    fn selfcheck_all_pass() {
        for s in [
            "psl2-2", "spo2-3", "spo2-5", "spo2-6", "spo2-7", "spo2-10", "d21-1-1", "d21-2-1",
            "d21-3-1", "d21-3-2", "d21-5-3", "f4", "g3",
        ] {
            let rep = alg(s).selfcheck();
            let bad: Vec<_> = rep.failures().map(|e| e.check_id.clone()).collect();
            assert!(bad.is_empty(), "{s}: {bad:?}");
        }
    }

    #[test]
    fn corrupted_root_file_is_caught() {
        let dir = std::env::temp_dir().join(format!("walg-rootdata-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        // drop the odd root d1 from spo(2|2r+1): h^∨ shifts
        let text = rootdata::embedded("spo2-odd")
            .unwrap()
            .replace("odd  d1\n", "");
        std::fs::write(dir.join("spo2-odd.roots"), text).unwrap();
        let a = build_algebra_with(AlgebraId::Spo2m(5), &RootDataSource::Directory(dir.clone()))
            .unwrap();
        let rep = a.selfcheck();
        assert!(rep.failures().any(|e| e.check_id == "catalog.h_check"));
        std::fs::remove_dir_all(dir).ok();
    }
}
