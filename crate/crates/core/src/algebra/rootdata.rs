//! Parser for the embedded positive-root files.
//!
//! A root file is line oriented. Blank lines and `#` comments are ignored.
//! The first two content lines are the header:
//!
//! ```text
//! walg-roots 1
//! family spo2-odd
//! ```
//!
//! Every following line is `<even|odd> <expr> [for i | for i<j]`, where
//! `<expr>` is a signed sum of terms `[coef*]symbol` such as `1/2*d1-e{i}`.
//! Index variables `i`, `j` range over `1..=rank` of the family's ε block.

use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::rational::Rational;

use super::Parity;

pub const FORMAT_VERSION: u32 = 1;

/// Where root files are read from.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub enum RootDataSource {
    #[default]
    Embedded,
    Directory(PathBuf),
}

impl RootDataSource {
    /// `Directory` when `WALG_DATA_DIR` is set, otherwise `Embedded`.
    pub fn from_env() -> Self {
        match std::env::var_os("WALG_DATA_DIR") {
            Some(dir) if !dir.is_empty() => RootDataSource::Directory(dir.into()),
            _ => RootDataSource::Embedded,
        }
    }

    pub fn load(&self, family: &str) -> Result<String> {
        match self {
            RootDataSource::Embedded => embedded(family)
                .map(str::to_string)
                .ok_or_else(|| Error::RootData(format!("no embedded data for family {family}"))),
            RootDataSource::Directory(dir) => {
                let path = dir.join(format!("{family}.roots"));
                std::fs::read_to_string(&path)
                    .map_err(|e| Error::RootData(format!("{}: {e}", display(&path))))
            }
        }
    }
}

fn display(p: &Path) -> String {
    p.display().to_string()
}

pub fn embedded(family: &str) -> Option<&'static str> {
    Some(match family {
        "psl2-2" => include_str!("../../data/psl2-2.roots"),
        "spo2-odd" => include_str!("../../data/spo2-odd.roots"),
        "spo2-even" => include_str!("../../data/spo2-even.roots"),
        "d21" => include_str!("../../data/d21.roots"),
        "f4" => include_str!("../../data/f4.roots"),
        "g3" => include_str!("../../data/g3.roots"),
        _ => return None,
    })
}

/// Maps a symbol such as `e2` or `d1` to ambient coordinates.
pub trait SymbolTable {
    fn resolve(&self, symbol: &str) -> Option<Vector>;
    fn dim(&self) -> usize;
    /// Upper bound for index variables.
    fn rank(&self) -> usize;
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootLine {
    pub parity: Parity,
    pub coords: Vector,
}

/// Parses a whole file and expands quantified lines.
pub fn parse_roots(text: &str, family: &str, symbols: &dyn SymbolTable) -> Result<Vec<RootLine>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(n, l)| (n + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let err = |n: usize, msg: String| Error::RootData(format!("line {n}: {msg}"));

    let (n, header) = lines
        .next()
        .ok_or_else(|| Error::RootData("empty root file".into()))?;
    match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["walg-roots", v] if v.parse::<u32>() == Ok(FORMAT_VERSION) => {}
        _ => {
            return Err(err(
                n,
                format!("expected `walg-roots {FORMAT_VERSION}`, got {header:?}"),
            ))
        }
    }
    let (n, fam) = lines
        .next()
        .ok_or_else(|| Error::RootData("missing family line".into()))?;
    match fam.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["family", f] if *f == family => {}
        _ => return Err(err(n, format!("expected `family {family}`, got {fam:?}"))),
    }

    let mut out = Vec::new();
    for (n, line) in lines {
        let (body, quant) = match line.split_once(" for ") {
            Some((b, q)) => (b.trim(), Some(q.trim())),
            None => (line, None),
        };
        let (par, expr) = body
            .split_once(char::is_whitespace)
            .ok_or_else(|| err(n, format!("expected `<parity> <expr>`, got {line:?}")))?;
        let parity = match par {
            "even" => Parity::Even,
            "odd" => Parity::Odd,
            other => return Err(err(n, format!("unknown parity {other:?}"))),
        };
        let expr = expr.trim();
        let r = symbols.rank();
        let bindings: Vec<Vec<(char, usize)>> = match quant {
            None => vec![vec![]],
            Some("i") => (1..=r).map(|i| vec![('i', i)]).collect(),
            Some("i<j") => (1..=r)
                .flat_map(|i| (i + 1..=r).map(move |j| vec![('i', i), ('j', j)]))
                .collect(),
            Some(other) => return Err(err(n, format!("unknown quantifier {other:?}"))),
        };
        for b in bindings {
            let coords = parse_expr(expr, symbols, &b).map_err(|e| err(n, e.to_string()))?;
            out.push(RootLine { parity, coords });
        }
    }
    Ok(out)
}

/// Parses a linear combination like `1/2*d1-e{i}+2*e3`.
pub fn parse_expr(
    expr: &str,
    symbols: &dyn SymbolTable,
    bindings: &[(char, usize)],
) -> Result<Vector> {
    let bad = |msg: &str| Error::RootData(format!("{msg} in {expr:?}"));
    let compact: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(bad("empty expression"));
    }
    let mut acc = vec![Rational::zero(); symbols.dim()];
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let (sign, body) = match rest.as_bytes()[0] {
            b'+' => (1, &rest[1..]),
            b'-' => (-1, &rest[1..]),
            _ if rest.len() == compact.len() => (1, rest),
            _ => return Err(bad("expected + or -")),
        };
        let end = body.find(['+', '-']).unwrap_or(body.len());
        let term = &body[..end];
        rest = &body[end..];
        let (coef, sym) = match term.split_once('*') {
            Some((c, s)) => (
                c.parse::<Rational>().map_err(|_| bad("bad coefficient"))?,
                s,
            ),
            None => (Rational::one(), term),
        };
        let sym = substitute(sym, bindings).ok_or_else(|| bad("unbound index variable"))?;
        let v = symbols
            .resolve(&sym)
            .ok_or_else(|| bad(&format!("unknown symbol {sym:?}")))?;
        let c = if sign < 0 { -coef } else { coef };
        for (a, x) in acc.iter_mut().zip(&v) {
            *a += &(&c * x);
        }
    }
    Ok(acc)
}

fn substitute(sym: &str, bindings: &[(char, usize)]) -> Option<String> {
    let Some(open) = sym.find('{') else {
        return Some(sym.to_string());
    };
    let close = sym.find('}')?;
    let var = sym[open + 1..close].chars().next()?;
    let (_, value) = bindings.iter().find(|(v, _)| *v == var)?;
    Some(format!("{}{}{}", &sym[..open], value, &sym[close + 1..]))
}
