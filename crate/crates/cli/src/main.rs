use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use grade3::altpf::{family, sub_pfaffians, AltMatrix, FamilyKind, FamilyMatrix};
use grade3::claims::{self, ClaimParams};
use grade3::experiments::{even_socle_study, generic_betti, realizability_sweep, theta_crosscheck};
use grade3::ideal::{ann, GradedIdeal, InverseSystem};
use grade3::koszul::{betti, BettiTable};
use grade3::poly::{DualForm, Poly};
use grade3::tor::invariants;
use grade3::trimres::{build_complex, TrimInput};
use grade3::Field;

#[derive(Parser)]
#[command(name = "grade3", version, about = "Betti tables, Tor algebra classes and trimmed Gorenstein resolutions over GF(p)[x,y,z]")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Global {
    /// Characteristic of the coefficient field (odd prime below 2^31)
    #[arg(long, global = true, default_value_t = 32003)]
    prime: u64,
    /// Seed for randomized verbs
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Largest degree examined when looking for the top of an Artinian quotient
    #[arg(long, global = true)]
    dmax: Option<u32>,
    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

/// Where the ideal comes from: a matrix family (its submaximal Pfaffians), an ideal file, an
/// inline generator list, or a dual form (its apolarity ideal).
#[derive(Args, Clone)]
struct Target {
    /// hev, hodd, vev, vodd, vj (uev, uodd, uj are square and only work with `pfaffians`)
    #[arg(long, value_parser = parse_family)]
    family: Option<FamilyKind>,
    /// Family parameter
    #[arg(long = "s", visible_alias = "m")]
    param: Option<usize>,
    /// Second parameter of the `uj` / `vj` families
    #[arg(long)]
    j: Option<usize>,
    /// JSON list of generators, or generators separated by commas / newlines
    #[arg(long, value_name = "FILE")]
    ideal: Option<PathBuf>,
    /// Inline comma-separated generators, e.g. "x^2,y^2,z^2"
    #[arg(long, value_name = "LIST")]
    gens: Option<String>,
    /// File holding a dual form in X, Y, Z
    #[arg(long, value_name = "FILE")]
    form: Option<PathBuf>,
    /// Inline dual form, e.g. "X^2*Y + Z^3"
    #[arg(long, value_name = "FORM")]
    phi: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExperimentKind {
    GenericBetti,
    Realizability,
    EvenSocle,
    Theta,
}

#[derive(Subcommand)]
enum Cmd {
    /// Graded Betti numbers of R/I
    Betti {
        #[command(flatten)]
        target: Target,
        /// Trim this generator (1-based) first
        #[arg(long)]
        index: Option<usize>,
    },
    /// Hilbert function and socle of R/I
    Hilbert {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        index: Option<usize>,
    },
    /// Signed submaximal Pfaffians of a family matrix (determinant for square families)
    Pfaffians {
        #[command(flatten)]
        target: Target,
    },
    /// Replace generator `index` by its products with x, y, z
    Trim {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        index: usize,
    },
    /// Tor algebra invariants (p, q, r) and class of R/I
    TorClass {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        index: Option<usize>,
    },
    /// Explicit free resolution of a trimmed Pfaffian ideal
    ResolveTrim {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        index: usize,
        /// Verify exactness strand by strand
        #[arg(long)]
        check: bool,
    },
    /// Apolarity ideal of a dual form
    Ann {
        #[arg(long, value_name = "FILE", required_unless_present = "phi")]
        form: Option<PathBuf>,
        #[arg(long, value_name = "FORM")]
        phi: Option<String>,
    },
    /// Re-derive a registered claim
    Reproduce {
        #[arg(required_unless_present = "list")]
        claim: Option<String>,
        /// Values of s (comma-separated); defaults depend on the claim
        #[arg(long = "s", value_delimiter = ',')]
        s: Vec<u32>,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        /// List the registered claims
        #[arg(long)]
        list: bool,
    },
    /// Seeded experiments
    Experiment {
        #[arg(value_enum)]
        kind: ExperimentKind,
        #[arg(long = "s", default_value_t = 3)]
        s: u32,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        /// Form degrees for `theta`
        #[arg(long, value_delimiter = ',', default_values_t = [3u32, 5, 7])]
        degrees: Vec<u32>,
    },
}

fn parse_family(s: &str) -> std::result::Result<FamilyKind, String> {
    s.parse().map_err(|e: grade3::Error| e.to_string())
}

/// Rendered output plus whether every asserted check passed.
struct Outcome {
    body: String,
    pass: bool,
}

impl Outcome {
    fn ok(body: String) -> Self {
        Outcome { body, pass: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let mut body = out.body;
            if !body.ends_with('\n') {
                body.push('\n');
            }
            let written = match &cli.global.out {
                Some(path) => fs::write(path, &body).with_context(|| format!("writing {}", path.display())),
                None => {
                    print!("{body}");
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {e:#}");
                return ExitCode::from(2);
            }
            if out.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    let g = &cli.global;
    let field = Field::new(g.prime).context("--prime")?;
    match &cli.cmd {
        Cmd::Betti { target, index } => {
            let ideal = maybe_trim(resolve(field, target)?, *index)?;
            let t = betti(&ideal, dmax_for(g, &ideal))?;
            Ok(Outcome::ok(render_betti(g.format, &t)?))
        }
        Cmd::Hilbert { target, index } => {
            let ideal = maybe_trim(resolve(field, target)?, *index)?;
            hilbert(g, &ideal)
        }
        Cmd::Pfaffians { target } => pfaffians(g, field, target),
        Cmd::Trim { target, index } => {
            let trimmed = resolve(field, target)?.ideal.trim(*index)?;
            Ok(Outcome::ok(render_ideal(g.format, &trimmed)?))
        }
        Cmd::TorClass { target, index } => {
            let ideal = maybe_trim(resolve(field, target)?, *index)?;
            let inv = invariants(&ideal, dmax_for(g, &ideal))?;
            let body = match g.format {
                Format::Text => format!("mu {}\ntype {}\np {}\nq {}\nr {}\nclass {}", inv.mu, inv.type_, inv.p, inv.q, inv.r, inv.class),
                Format::Json => serde_json::to_string_pretty(&inv)?,
                Format::Csv => csv_rows(&["mu", "type", "p", "q", "r", "class"], [[inv.mu.to_string(), inv.type_.to_string(), inv.p.to_string(), inv.q.to_string(), inv.r.to_string(), inv.class.to_string()]])?,
            };
            Ok(Outcome::ok(body))
        }
        Cmd::ResolveTrim { target, index, check } => resolve_trim(g, field, target, *index, *check),
        Cmd::Ann { form, phi } => {
            let phi = read_form(field, form.as_ref(), phi.as_deref())?;
            let sys = InverseSystem::single(phi.clone())?;
            let ideal = ann(&sys, 0);
            let dmax = g.dmax.unwrap_or(phi.degree() + 1);
            let t = betti(&ideal, dmax)?;
            let h = ideal.hilbert(phi.degree() + 1);
            let gens: Vec<String> = ideal.gens().iter().map(|p| p.to_string()).collect();
            let body = match g.format {
                Format::Text => format!("form {phi}\ngenerators ({}):\n  {}\n{}\n{}", gens.len(), gens.join("\n  "), h.to_text(), t.to_text()),
                Format::Json => serde_json::to_string_pretty(&json!({"form": phi.to_string(), "generators": gens, "hilbert": h, "betti": t.to_json()}))?,
                Format::Csv => csv_rows(&["index", "generator"], gens.iter().enumerate().map(|(k, p)| [(k + 1).to_string(), p.clone()]))?,
            };
            Ok(Outcome::ok(body))
        }
        Cmd::Reproduce { claim, s, trials, list } => {
            if *list {
                let lines: Vec<String> = claims::CLAIMS.iter().map(|c| format!("{:<16} s: {:<14} {}", c.id, c.s_rule, c.statement)).collect();
                return Ok(Outcome::ok(lines.join("\n")));
            }
            let id = claim.as_deref().expect("clap enforces a claim id");
            let params = ClaimParams { s_values: (!s.is_empty()).then(|| s.clone()), trials: *trials, seed: g.seed };
            let report = claims::reproduce(field, id, &params).map_err(|e| match e {
                grade3::Error::UnknownClaim(_) => anyhow!("{e}; known claims: {}", claims::claim_ids().join(", ")),
                other => anyhow!(other),
            })?;
            let body = match g.format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json(),
                Format::Csv => report.to_csv()?,
            };
            Ok(Outcome { body, pass: report.pass })
        }
        Cmd::Experiment { kind, s, trials, degrees } => {
            let report = match kind {
                ExperimentKind::GenericBetti => generic_betti(field, *s, *trials, g.seed)?,
                ExperimentKind::Realizability => realizability_sweep(field, *s)?,
                ExperimentKind::EvenSocle => even_socle_study(field, *s, *trials, g.seed)?,
                ExperimentKind::Theta => theta_crosscheck(field, degrees, *trials, g.seed)?,
            };
            let body = match g.format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json(),
                Format::Csv => report.to_csv()?,
            };
            Ok(Outcome { body, pass: report.ok() })
        }
    }
}

struct Resolved {
    ideal: GradedIdeal,
    matrix: Option<AltMatrix>,
}

fn resolve(field: Field, t: &Target) -> Result<Resolved> {
    let given = [t.family.is_some(), t.ideal.is_some(), t.gens.is_some(), t.form.is_some() || t.phi.is_some()];
    match given.iter().filter(|&&b| b).count() {
        0 => bail!("no target: pass --family, --ideal, --gens, or --form/--phi"),
        1 => {}
        _ => bail!("pass exactly one of --family, --ideal, --gens, --form/--phi"),
    }
    if t.family.is_some() {
        let m = family_matrix(field, t)?.alternating().context("the family must give an odd-size alternating matrix")?;
        let ideal = GradedIdeal::new(field, sub_pfaffians(&m)?.pf)?;
        return Ok(Resolved { ideal, matrix: Some(m) });
    }
    let ideal = if let Some(path) = &t.ideal {
        let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        parse_ideal(field, &text)?
    } else if let Some(list) = &t.gens {
        parse_ideal(field, list)?
    } else {
        let phi = read_form(field, t.form.as_ref(), t.phi.as_deref())?;
        ann(&InverseSystem::single(phi)?, 0)
    };
    Ok(Resolved { ideal, matrix: None })
}

fn family_matrix(field: Field, t: &Target) -> Result<FamilyMatrix> {
    let kind = t.family.ok_or_else(|| anyhow!("--family is required"))?;
    let param = t.param.ok_or_else(|| anyhow!("--s (or --m) is required with --family"))?;
    Ok(family(field, kind, param, t.j)?)
}

fn parse_ideal(field: Field, text: &str) -> Result<GradedIdeal> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('[') {
        return Ok(GradedIdeal::from_json(field, trimmed)?);
    }
    let gens: Vec<&str> = text.split([',', '\n']).map(str::trim).filter(|s| !s.is_empty() && !s.starts_with('#')).collect();
    if gens.is_empty() {
        bail!("no generators given");
    }
    Ok(GradedIdeal::parse(field, &gens)?)
}

fn read_form(field: Field, path: Option<&PathBuf>, inline: Option<&str>) -> Result<DualForm> {
    let text = match (path, inline) {
        (Some(p), None) => fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?,
        (None, Some(s)) => s.to_string(),
        _ => bail!("pass exactly one of --form and --phi"),
    };
    // same grammar as polynomials, with X, Y, Z in place of x, y, z
    let body = Poly::parse(field, &text.trim().to_ascii_lowercase())?;
    let degree = body.degree().ok_or_else(|| anyhow!("zero dual form"))?;
    Ok(DualForm::new(degree, body)?)
}

fn maybe_trim(r: Resolved, index: Option<usize>) -> Result<GradedIdeal> {
    Ok(match index {
        Some(i) => r.ideal.trim(i)?,
        None => r.ideal,
    })
}

/// An `m`-primary ideal generated in degrees `<= d` contains a regular sequence of degree-`d`
/// forms, so its quotient vanishes from degree `3d - 2` on.
fn dmax_for(g: &Global, ideal: &GradedIdeal) -> u32 {
    g.dmax.unwrap_or_else(|| 3 * ideal.max_gen_degree().unwrap_or(1).max(1) - 2)
}

fn csv_rows<R, I>(header: &[&str], rows: R) -> Result<String>
where
    R: IntoIterator<Item = I>,
    I: IntoIterator,
    I::Item: AsRef<[u8]>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(r)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn render_betti(format: Format, t: &BettiTable) -> Result<String> {
    Ok(match format {
        Format::Text => t.to_text(),
        Format::Json => serde_json::to_string_pretty(&t.to_json())?,
        Format::Csv => csv_rows(&["i", "j", "beta"], t.entries().iter().map(|(&(i, j), &b)| [i.to_string(), j.to_string(), b.to_string()]))?,
    })
}

fn render_ideal(format: Format, ideal: &GradedIdeal) -> Result<String> {
    let mg = ideal.min_gens();
    let gens: Vec<String> = ideal.gens().iter().map(|p| p.to_string()).collect();
    Ok(match format {
        Format::Text => format!("generators ({}):\n  {}\nminimal generators: {} by degree {:?}", gens.len(), gens.join("\n  "), mg.mu, mg.by_degree),
        Format::Json => serde_json::to_string_pretty(&json!({"generators": gens, "mu": mg.mu, "by_degree": mg.by_degree}))?,
        Format::Csv => csv_rows(&["index", "generator"], gens.iter().enumerate().map(|(k, p)| [(k + 1).to_string(), p.clone()]))?,
    })
}

fn hilbert(g: &Global, ideal: &GradedIdeal) -> Result<Outcome> {
    let h = ideal.hilbert(dmax_for(g, ideal));
    if !h.is_artinian() {
        bail!("quotient is not Artinian up to degree {}; raise --dmax", h.hf.len() - 1);
    }
    let socle: BTreeMap<u32, usize> = h.socle_type();
    let compressed = ideal.is_compressed(&socle)?;
    let body = match g.format {
        Format::Text => {
            let parts: Vec<String> = socle.iter().map(|(d, c)| if *c == 1 { format!("k(-{d})") } else { format!("k(-{d})^{c}") }).collect();
            format!("{}\nsocle: {}\ncompressed: {compressed}", h.to_text(), parts.join(" + "))
        }
        Format::Json => serde_json::to_string_pretty(&json!({"hf": h.hf, "socle": h.socle, "top_degree": h.top_degree, "socle_type": socle, "compressed": compressed}))?,
        Format::Csv => csv_rows(&["degree", "hf", "socle"], h.hf.iter().zip(&h.socle).enumerate().map(|(d, (a, b))| [d.to_string(), a.to_string(), b.to_string()]))?,
    };
    Ok(Outcome::ok(body))
}

fn pfaffians(g: &Global, field: Field, t: &Target) -> Result<Outcome> {
    let alt = match family_matrix(field, t)? {
        FamilyMatrix::Square(m) => {
            let det = m.det().to_string();
            let body = match g.format {
                Format::Text => format!("det = {det}"),
                Format::Json => serde_json::to_string_pretty(&json!({"size": m.nrows(), "det": det}))?,
                Format::Csv => csv_rows(&["det"], [[det]])?,
            };
            return Ok(Outcome::ok(body));
        }
        FamilyMatrix::Alternating(a) => a,
    };
    let sys = sub_pfaffians(&alt)?;
    let syzygy = sys.syzygy_residual().iter().all(Poly::is_zero);
    let pfs: Vec<String> = sys.pf.iter().map(|p| p.to_string()).collect();
    let body = match g.format {
        Format::Text => {
            let mut s: Vec<String> = pfs.iter().enumerate().map(|(k, p)| format!("pf_{} = {p}", k + 1)).collect();
            s.push(format!("M * pf = 0: {syzygy}"));
            s.join("\n")
        }
        Format::Json => serde_json::to_string_pretty(&json!({"matrix": alt.to_json(), "pfaffians": pfs, "syzygy_zero": syzygy}))?,
        Format::Csv => csv_rows(&["index", "pfaffian"], pfs.iter().enumerate().map(|(k, p)| [(k + 1).to_string(), p.clone()]))?,
    };
    Ok(Outcome { body, pass: syzygy })
}

fn resolve_trim(g: &Global, field: Field, t: &Target, index: usize, check: bool) -> Result<Outcome> {
    let resolved = resolve(field, t)?;
    let matrix = resolved.matrix.ok_or_else(|| anyhow!("resolve-trim needs --family"))?;
    let input = TrimInput::new(matrix, index)?;
    let complex = build_complex(&input)?;
    let top = input.pfaffians().iter().filter_map(Poly::degree).max().unwrap_or(1);
    let report = check.then(|| complex.verify_exactness(g.dmax.unwrap_or(3 * top + 3)));
    let pass = report.as_ref().map_or(true, |r| r.is_complex && r.exact);
    let body = match g.format {
        Format::Json => serde_json::to_string_pretty(&complex.to_json(report.as_ref()))?,
        Format::Csv => match &report {
            Some(r) => csv_rows(
                &["degree", "dim_f0", "dim_f1", "dim_f2", "dim_f3", "rank_d1", "rank_d2", "rank_d3", "hf", "exact"],
                r.degrees.iter().map(|c| {
                    let mut row: Vec<String> = vec![c.degree.to_string()];
                    row.extend(c.dims.iter().map(|v| v.to_string()));
                    row.extend(c.ranks.iter().map(|v| v.to_string()));
                    row.push(c.hf.to_string());
                    row.push(c.exact.to_string());
                    row
                }),
            )?,
            None => csv_rows(&["k", "shifts"], complex.shifts().iter().enumerate().map(|(k, s)| [k.to_string(), format!("{s:?}")]))?,
        },
        Format::Text => {
            let mut s = format!("trim of a {}-square Pfaffian ideal at index {}\n", input.size(), input.index());
            for (k, sh) in complex.shifts().iter().enumerate() {
                s += &format!("F{k}: rank {} shifts {:?}\n", sh.len(), sh);
            }
            s += &format!("d1 d2 = d2 d3 = 0: {}\nminimal as built: {}\npredicted generators: {}\n", complex.is_complex(), complex.is_minimal(), input.predicted_mu());
            s += &format!("betti after cancelling units:\n{}", complex.cancelled_betti().to_text());
            if let Some(r) = &report {
                let bad: Vec<u32> = r.degrees.iter().filter(|c| !c.exact).map(|c| c.degree).collect();
                s += &format!("exact through degree {}: {}", r.dmax, r.exact);
                if !bad.is_empty() {
                    s += &format!(" (fails in degrees {bad:?})");
                }
            }
            s
        }
    };
    Ok(Outcome { body, pass })
}
