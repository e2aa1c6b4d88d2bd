//! JSON catalog files: a header, one classification record per requested
//! kind, and an optional ledger report. Field order is fixed by the struct
//! definitions, so equal inputs give byte-identical output.

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraData, AlgebraId};
use crate::classify::{affine_classification, w_classification, HValues, Level};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::report::Report;

pub const TOOL: &str = "walg";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Algebras exercised by `selfcheck --all` and the test suites.
pub fn standard_algebras() -> Vec<AlgebraId> {
    vec![
        AlgebraId::Psl22,
        AlgebraId::Spo2m(3),
        AlgebraId::Spo2m(5),
        AlgebraId::Spo2m(6),
        AlgebraId::Spo2m(7),
        AlgebraId::D21(2, 1),
        AlgebraId::D21(3, 1),
        AlgebraId::D21(3, 2),
        AlgebraId::D21(5, 2),
        AlgebraId::D21(5, 3),
        AlgebraId::F4,
        AlgebraId::G3,
    ]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RecordKind {
    W,
    Affine,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WModuleRecord {
    pub nu_coeffs: Vec<u32>,
    /// `"free"` or a rational.
    pub ell0: String,
    pub extremal: bool,
    #[serde(rename = "A")]
    pub a: Rational,
    pub unitarity: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum HField {
    /// Always `"free"`.
    Free(String),
    Set(Vec<Rational>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineModuleRecord {
    pub nu_coeffs: Vec<u32>,
    pub h: HField,
    pub extremal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Modules {
    W(Vec<WModuleRecord>),
    Affine(Vec<AffineModuleRecord>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub kind: RecordKind,
    pub algebra: AlgebraId,
    pub k: Rational,
    #[serde(rename = "M")]
    pub m: Vec<Rational>,
    /// Set on W records: the list is also every irreducible positive energy module.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complete_for_positive_energy: Option<bool>,
    pub modules: Modules,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogHeader {
    pub tool: String,
    pub version: String,
    pub algebra: AlgebraId,
    pub k: Rational,
    #[serde(rename = "M")]
    pub m: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogFile {
    pub header: CatalogHeader,
    pub records: Vec<ClassificationRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ledger: Option<Report>,
}

pub fn w_record(level: &Level) -> Result<ClassificationRecord> {
    let modules = w_classification(level)?
        .into_iter()
        .map(|e| WModuleRecord {
            nu_coeffs: e.label.nu.coeffs().to_vec(),
            ell0: e.label.ell0.to_string(),
            extremal: e.extremal,
            a: e.a,
            unitarity: e.verdict.to_string(),
        })
        .collect();
    Ok(ClassificationRecord {
        kind: RecordKind::W,
        algebra: level.algebra(),
        k: level.k().clone(),
        m: level.m_values(),
        complete_for_positive_energy: Some(true),
        modules: Modules::W(modules),
    })
}

pub fn affine_record(level: &Level) -> Result<ClassificationRecord> {
    let modules = affine_classification(level)?
        .into_iter()
        .map(|e| AffineModuleRecord {
            nu_coeffs: e.nu.coeffs().to_vec(),
            h: match e.h {
                HValues::Free => HField::Free("free".into()),
                HValues::Set(v) => HField::Set(v),
            },
            extremal: e.extremal,
        })
        .collect();
    Ok(ClassificationRecord {
        kind: RecordKind::Affine,
        algebra: level.algebra(),
        k: level.k().clone(),
        m: level.m_values(),
        complete_for_positive_energy: None,
        modules: Modules::Affine(modules),
    })
}

impl CatalogFile {
    pub fn build(
        alg: &AlgebraData,
        k: Rational,
        kinds: &[RecordKind],
        ledger: Option<Report>,
    ) -> Result<Self> {
        let level = Level::new(alg, k)?;
        level.require_range()?;
        let records = kinds
            .iter()
            .map(|kind| match kind {
                RecordKind::W => w_record(&level),
                RecordKind::Affine => affine_record(&level),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CatalogFile {
            header: CatalogHeader {
                tool: TOOL.into(),
                version: VERSION.into(),
                algebra: alg.id,
                k: level.k().clone(),
                m: level.m_values(),
            },
            records,
            ledger,
        })
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("catalog types serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Invalid(format!("catalog JSON: {e}")))
    }
}
