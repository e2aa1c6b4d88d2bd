//! The `walg` command line. [`run_command`] does all the work and returns
//! the exit code and captured output, so the binary is a thin wrapper and
//! tests can drive the CLI in-process.

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::affine::{affine_simple_roots, eta, reflected_system};
use crate::algebra::rootdata::RootDataSource;
use crate::algebra::{build_algebra_with, tables, AlgebraData, AlgebraId};
use crate::catalog::{standard_algebras, CatalogFile, RecordKind};
use crate::classify::{
    affine_module_descends, hamiltonian_reduce, unitarity_verdict, AffineModuleLabel,
    DominantWeight, Ell0, Level, WModuleLabel,
};
use crate::error::{Error, Result};
use crate::ledger::run_all;
use crate::rational::Rational;
use crate::report::Report;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutput {
    fn ok(stdout: String) -> Self {
        CommandOutput {
            exit_code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(stderr: String) -> Self {
        CommandOutput {
            exit_code: 2,
            stdout: String::new(),
            stderr,
        }
    }
}

fn parse_algebra(s: &str) -> std::result::Result<AlgebraId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_rational(s: &str) -> std::result::Result<Rational, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// `--nu c1,c2,...`
#[derive(Debug, Clone)]
struct Coeffs(Vec<u32>);

fn parse_nu(s: &str) -> std::result::Result<Coeffs, String> {
    s.split(',')
        .map(|c| {
            c.trim()
                .parse::<u32>()
                .map_err(|_| format!("expected nonnegative integers, got {s:?}"))
        })
        .collect::<std::result::Result<_, _>>()
        .map(Coeffs)
}

#[derive(Debug, Parser)]
#[command(
    name = "walg",
    version,
    about = "Classify modules of unitary minimal W-algebras exactly"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Root data and derived constants of an algebra, as JSON.
    Info {
        /// psl2-2, spo2-<n>, d21-<m>-<n>, f4 or g3.
        #[arg(value_parser = parse_algebra)]
        algebra: AlgebraId,
    },
    /// Whether k is in the unitarity range, with the levels M_i(k).
    Range {
        /// psl2-2, spo2-<n>, d21-<m>-<n>, f4 or g3.
        #[arg(value_parser = parse_algebra)]
        algebra: AlgebraId,
        /// Level, an integer or p/q.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        k: Rational,
    },
    /// Irreducible highest weight modules at level k.
    Modules {
        /// psl2-2, spo2-<n>, d21-<m>-<n>, f4 or g3.
        #[arg(value_parser = parse_algebra)]
        algebra: AlgebraId,
        /// Level, an integer or p/q.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        k: Rational,
        /// Modules of the affine vertex algebra V_k(g).
        #[arg(long)]
        affine: bool,
        /// Modules of the W-algebra (default).
        #[arg(long)]
        w: bool,
        /// Emit a JSON catalog file.
        #[arg(long)]
        json: bool,
        /// Attach the ledger checks for this level (JSON only).
        #[arg(long, requires = "json")]
        ledger: bool,
    },
    /// Unitarity verdict for L^W(ν, ℓ₀).
    Unitary {
        /// psl2-2, spo2-<n>, d21-<m>-<n>, f4 or g3.
        #[arg(value_parser = parse_algebra)]
        algebra: AlgebraId,
        /// Level, an integer or p/q.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        k: Rational,
        /// Coefficients of ν over the fundamental weights of g^♮, comma separated.
        #[arg(long, value_parser = parse_nu)]
        nu: Coeffs,
        /// Lowest L₀-eigenvalue.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        ell0: Rational,
    },
    /// Hamiltonian reduction H₀ of L(kΛ₀ + hθ + ν).
    Reduce {
        /// psl2-2, spo2-<n>, d21-<m>-<n>, f4 or g3.
        #[arg(value_parser = parse_algebra)]
        algebra: AlgebraId,
        /// Level, an integer or p/q.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        k: Rational,
        /// Coefficients of ν over the fundamental weights of g^♮, comma separated.
        #[arg(long, value_parser = parse_nu)]
        nu: Coeffs,
        /// Coefficient of θ in the highest weight.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        h: Rational,
    },
    /// The reflected affine simple roots r_{α₀+α₁} r_{α₁}(Π̂) and the η_i check.
    Reflect {
        /// psl2-2, spo2-<n>, d21-<m>-<n>, f4 or g3.
        #[arg(value_parser = parse_algebra)]
        algebra: AlgebraId,
    },
    /// Catalog self-checks; with --all also reflection, ledger and classification identities.
    Selfcheck {
        /// Run every check, not only the catalog invariants.
        #[arg(long)]
        all: bool,
        /// Number of range levels per algebra for --all.
        #[arg(long, default_value_t = 10)]
        levels: u32,
        /// Print the full report as JSON.
        #[arg(long)]
        json: bool,
        /// Algebras to check (default: the standard sample).
        #[arg(value_parser = parse_algebra)]
        algebras: Vec<AlgebraId>,
    },
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run_command<I, T>(argv: I) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    CommandOutput::ok(text)
                }
                _ => CommandOutput::usage(text),
            };
        }
    };
    let source = RootDataSource::from_env();
    match dispatch(cli.cmd, &source) {
        Ok(out) => out,
        Err(e) => CommandOutput::usage(format!("error: {e}\n")),
    }
}

fn load(id: AlgebraId, source: &RootDataSource) -> Result<AlgebraData> {
    build_algebra_with(id, source)
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn dispatch(cmd: Cmd, source: &RootDataSource) -> Result<CommandOutput> {
    match cmd {
        Cmd::Info { algebra } => {
            let alg = load(algebra, source)?;
            let mut s = serde_json::to_string_pretty(&alg).expect("algebra data serializes");
            s.push('\n');
            Ok(CommandOutput::ok(s))
        }
        Cmd::Range { algebra, k } => {
            let alg = load(algebra, source)?;
            let level = Level::new(&alg, k)?;
            Ok(CommandOutput::ok(pretty(&json!({
                "algebra": algebra,
                "k": level.k(),
                "in_range": level.in_unitarity_range(),
                "M": level.m_values(),
            }))))
        }
        Cmd::Modules {
            algebra,
            k,
            affine,
            w,
            json,
            ledger,
        } => {
            let alg = load(algebra, source)?;
            let mut kinds = Vec::new();
            if w || !affine {
                kinds.push(RecordKind::W);
            }
            if affine {
                kinds.push(RecordKind::Affine);
            }
            let report = if ledger {
                Some(run_all(&alg, std::slice::from_ref(&k))?)
            } else {
                None
            };
            let cat = CatalogFile::build(&alg, k, &kinds, report)?;
            if json {
                Ok(CommandOutput::ok(cat.to_json()))
            } else {
                Ok(CommandOutput::ok(render_modules(&cat)))
            }
        }
        Cmd::Unitary {
            algebra,
            k,
            nu,
            ell0,
        } => {
            let alg = load(algebra, source)?;
            let level = Level::new(&alg, k)?;
            let label = WModuleLabel {
                nu: DominantWeight::new(&alg, nu.0)?,
                ell0: Ell0::Value(ell0),
            };
            let verdict = unitarity_verdict(&level, &label)?;
            Ok(CommandOutput::ok(pretty(&json!({
                "algebra": algebra,
                "k": level.k(),
                "nu_coeffs": label.nu.coeffs(),
                "ell0": label.ell0,
                "verdict": verdict,
            }))))
        }
        Cmd::Reduce { algebra, k, nu, h } => {
            let alg = load(algebra, source)?;
            let level = Level::new(&alg, k)?;
            let label = AffineModuleLabel {
                nu: DominantWeight::new(&alg, nu.0)?,
                h,
            };
            let result = match hamiltonian_reduce(&level, &label) {
                None => json!("zero"),
                Some(w) => json!({"nu_coeffs": w.nu.coeffs(), "ell0": w.ell0}),
            };
            let mut out = json!({"result": result});
            if level.in_unitarity_range() {
                out["descends"] = json!(affine_module_descends(&level, &label)?);
            }
            Ok(CommandOutput::ok(pretty(&out)))
        }
        Cmd::Reflect { algebra } => {
            let alg = load(algebra, source)?;
            let reflected = reflected_system(&alg)?;
            let etas: Vec<_> = (0..alg.theta_i.len())
                .map(|i| {
                    let e = eta(&alg, i);
                    json!({"index": i + 1, "root": e, "member": reflected.contains(&e)})
                })
                .collect();
            let all = etas.iter().all(|e| e["member"] == json!(true));
            let mut out = CommandOutput::ok(pretty(&json!({
                "algebra": algebra,
                "simple_roots": affine_simple_roots(&alg),
                "reflected": reflected,
                "eta": etas,
            })));
            if !all {
                out.exit_code = 1;
            }
            Ok(out)
        }
        Cmd::Selfcheck {
            all,
            levels,
            json,
            algebras,
        } => {
            let ids = if algebras.is_empty() {
                standard_algebras()
            } else {
                algebras
            };
            let mut full = Report::new();
            let mut lines = String::new();
            for id in ids {
                let alg = load(id, source)?;
                let mut rep = alg.selfcheck();
                if all {
                    let ks: Vec<_> = (1..=levels).map(|i| tables::range_level(id, i)).collect();
                    rep.extend(run_all(&alg, &ks)?);
                }
                let failed: Vec<_> = rep.failures().cloned().collect();
                let status = if failed.is_empty() { "ok  " } else { "FAIL" };
                lines.push_str(&format!(
                    "{status} {:<10} {} checks\n",
                    id.to_string(),
                    rep.len()
                ));
                for f in &failed {
                    let k = f.k.as_ref().map(|k| format!(" k={k}")).unwrap_or_default();
                    lines.push_str(&format!(
                        "     {}{k}: expected {:?}, computed {:?}\n",
                        f.check_id, f.expected, f.computed
                    ));
                }
                full.extend(rep);
            }
            let nfail = full.failures().count();
            lines.push_str(&format!(
                "selfcheck: {} checks, {} failed\n",
                full.len(),
                nfail
            ));
            let stdout = if json {
                let mut s = serde_json::to_string_pretty(&full).expect("reports serialize");
                s.push('\n');
                s
            } else {
                lines
            };
            Ok(CommandOutput {
                exit_code: if nfail == 0 { 0 } else { 1 },
                stdout,
                stderr: String::new(),
            })
        }
    }
}

fn render_modules(cat: &CatalogFile) -> String {
    use crate::catalog::{HField, Modules};
    let h = &cat.header;
    let m: Vec<String> = h.m.iter().map(Rational::to_string).collect();
    let mut out = format!("{} at k = {}, M = [{}]\n", h.algebra, h.k, m.join(", "));
    for rec in &cat.records {
        match &rec.modules {
            Modules::W(mods) => {
                out.push_str("W-algebra modules L^W(nu, ell0):\n");
                for e in mods {
                    out.push_str(&format!(
                        "  nu=({})  ell0={}  extremal={}  A={}  unitarity={}\n",
                        join(&e.nu_coeffs),
                        e.ell0,
                        if e.extremal { "yes" } else { "no" },
                        e.a,
                        e.unitarity
                    ));
                }
            }
            Modules::Affine(mods) => {
                out.push_str("affine modules L(k Lambda0 + h theta + nu):\n");
                for e in mods {
                    let hs = match &e.h {
                        HField::Free(s) => s.clone(),
                        HField::Set(v) => {
                            format!(
                                "{{{}}}",
                                v.iter()
                                    .map(Rational::to_string)
                                    .collect::<Vec<_>>()
                                    .join(", ")
                            )
                        }
                    };
                    out.push_str(&format!(
                        "  nu=({})  h={}  extremal={}\n",
                        join(&e.nu_coeffs),
                        hs,
                        if e.extremal { "yes" } else { "no" }
                    ));
                }
            }
        }
    }
    out
}

fn join(c: &[u32]) -> String {
    c.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}
