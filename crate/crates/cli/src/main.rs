//! Command-line front end: expansions, transition matrices, Möbius values,
//! structure constants, plethysm, the quasisymmetric bridge, and the
//! verification suites.

use std::collections::BTreeMap;
use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use xbasis::composition::{join_parts, parse_parts, Partition, StrongComposition, WeakComposition};
use xbasis::error::Error;
use xbasis::hall_littlewood::{hl_expand, hl_matrix, hl_structure, schur_p_expand};
use xbasis::oracle::{extract_symmetric, suite_names, verify_suite, AnyBasis, SymTarget};
use xbasis::permutation::Permutation;
use xbasis::plethysm::{plethysm_in_schur, plethysm_poly};
use xbasis::poly::SparsePoly;
use xbasis::polybases::{expand_poly, poly_matrix, poly_structure};
use xbasis::poset::{lehmer_poset, partitions_poset, strong_poset, strong_prime_poset, weak_poset};
use xbasis::qsym::{expand_qsym, qsym_matrix, qsym_structure, QsymBasis};
use xbasis::rational::{format_rat, parse_rat, rat_from_json, rat_int, rat_to_json, Rat};
use xbasis::symfn::{classic_matrix, expand_classic, structure_constants_classic, ClassicBasis};
use xbasis::transition::{IndexVec, InvertMode, TransitionMatrix};

#[derive(Parser)]
#[command(name = "xbasis", version, about = "Exact basis arithmetic for symmetric, quasisymmetric, and polynomial-ring bases")]
struct Cli {
    /// Worker threads for parallel sections.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Chains,
    Backsub,
}

impl Mode {
    fn invert_mode(self) -> InvertMode {
        match self {
            Mode::Chains => InvertMode::Chains,
            Mode::Backsub => InvertMode::BackSub,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum PlethOut {
    Schur,
    Monomial,
}

#[derive(Subcommand)]
enum Command {
    /// Expand one basis element into monomials.
    Expand {
        /// Basis token: m, e, h, p, s, hl, schurp, M, F, dimm, qschur, pcomb,
        /// psi, phi, mslide, fslide, atom, key, lascoux, schubert, grothendieck.
        #[arg(long)]
        basis: String,
        /// Comma-separated index (partition or composition).
        #[arg(long)]
        index: Option<String>,
        /// One-line permutation (digits, or comma-separated) in place of --index.
        #[arg(long)]
        perm: Option<String>,
        /// Lehmer code in place of --index.
        #[arg(long)]
        code: Option<String>,
        /// Number of variables (required except for polynomial-ring bases).
        #[arg(long)]
        nvars: Option<usize>,
        /// Deformation parameter as p/q (hl basis only).
        #[arg(long)]
        t: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print a monomial-expansion transition matrix, or its inverse.
    Transition {
        #[arg(long)]
        basis: String,
        /// Total degree of the indexing family.
        #[arg(long)]
        degree: u32,
        /// Number of variables (polynomial-ring bases only).
        #[arg(long)]
        nvars: Option<usize>,
        /// Deformation parameter as p/q (hl basis only).
        #[arg(long)]
        t: Option<String>,
        /// Invert the matrix before printing.
        #[arg(long)]
        inverse: bool,
        #[arg(long, value_enum, default_value_t = Mode::Chains)]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Möbius function value μ(x, y) in a named poset.
    Mobius {
        /// Poset: dominance-partitions, dominance-compositions,
        /// sorted-dominance, dominance-weak, lehmer.
        #[arg(long)]
        poset: String,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long, value_enum, default_value_t = Mode::Chains)]
        mode: Mode,
    },
    /// Structure constants of a product in the chosen basis.
    Mult {
        #[arg(long)]
        basis: String,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        /// Deformation parameter as p/q (hl basis only).
        #[arg(long)]
        t: Option<String>,
        #[arg(long, value_enum, default_value_t = Mode::Chains)]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Plethysm f_lambda[g_mu] in the Schur or monomial basis.
    Plethysm {
        /// Outer basis: m, e, h, p, or s.
        #[arg(long)]
        f: String,
        #[arg(long)]
        flambda: String,
        /// Inner basis: m, e, h, p, or s.
        #[arg(long)]
        g: String,
        #[arg(long)]
        gmu: String,
        /// Number of variables (defaults to |lambda|·|mu|).
        #[arg(long)]
        nvars: Option<usize>,
        #[arg(long, value_enum, default_value_t = PlethOut::Schur)]
        out: PlethOut,
        #[arg(long, value_enum, default_value_t = Mode::Chains)]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Recognize a quasisymmetric coefficient map as a symmetric function.
    Bridge {
        /// Quasisymmetric basis of the input map.
        #[arg(long, default_value = "M")]
        basis: String,
        /// JSON object {"index": {"num": "...", "den": "..."}}, or - for stdin.
        #[arg(long)]
        coeffs: String,
        #[arg(long, value_enum, default_value_t = Mode::Chains)]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a verification suite and report per-case results.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type CliResult = Result<(String, u8), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs.max(1))
        .build()
    {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    match pool.install(|| run(cli.command)) {
        Ok((text, code)) => {
            print!("{text}");
            ExitCode::from(code)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> CliResult {
    match command {
        Command::Expand {
            basis,
            index,
            perm,
            code,
            nvars,
            t,
            format,
        } => run_expand(&basis, index, perm, code, nvars, t, format),
        Command::Transition {
            basis,
            degree,
            nvars,
            t,
            inverse,
            mode,
            format,
        } => run_transition(&basis, degree, nvars, t, inverse, mode, format),
        Command::Mobius { poset, x, y, mode } => run_mobius(&poset, &x, &y, mode),
        Command::Mult {
            basis,
            a,
            b,
            t,
            mode,
            format,
        } => run_mult(&basis, &a, &b, t, mode, format),
        Command::Plethysm {
            f,
            flambda,
            g,
            gmu,
            nvars,
            out,
            mode,
            format,
        } => run_plethysm(&f, &flambda, &g, &gmu, nvars, out, mode, format),
        Command::Bridge {
            basis,
            coeffs,
            mode,
            format,
        } => run_bridge(&basis, &coeffs, mode, format),
        Command::Verify { suite, format } => run_verify(&suite, format),
    }
}

fn need<T>(opt: Option<T>, flag: &str) -> Result<T, Failure> {
    opt.ok_or_else(|| Failure::Usage(format!("--{flag} is required for this invocation")))
}

fn partition_arg(s: &str) -> Result<Partition, Failure> {
    Ok(Partition::new(parse_parts(s)?)?)
}

fn composition_arg(s: &str) -> Result<StrongComposition, Failure> {
    Ok(StrongComposition::new(parse_parts(s)?)?)
}

fn weak_arg(s: &str) -> Result<WeakComposition, Failure> {
    Ok(WeakComposition::new(parse_parts(s)?))
}

/// Resolves the polynomial-ring index from exactly one of --index, --perm,
/// --code; a permutation is converted to its Lehmer code.
fn poly_index(
    index: &Option<String>,
    perm: &Option<String>,
    code: &Option<String>,
) -> Result<WeakComposition, Failure> {
    let given = [index, perm, code].iter().filter(|o| o.is_some()).count();
    if given != 1 {
        return Err(Failure::Usage(
            "provide exactly one of --index, --perm, --code".into(),
        ));
    }
    if let Some(s) = index.as_deref().or(code.as_deref()) {
        return weak_arg(s);
    }
    let s = perm.as_deref().unwrap();
    let word: Vec<u32> = if s.contains(',') {
        parse_parts(s)?
    } else {
        s.chars()
            .map(|c| {
                c.to_digit(10)
                    .filter(|&d| d > 0)
                    .ok_or_else(|| Error::Parse(format!("bad permutation digit {c:?}")))
            })
            .collect::<Result<_, _>>()?
    };
    let p = Permutation::new(word)?;
    Ok(WeakComposition::new(p.lehmer_code()))
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_rat(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn render_poly(p: &SparsePoly, format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            for (e, c) in p.terms() {
                out.push_str(&format!("x^({})  {}\n", join_parts(e), format_rat(c)));
            }
            out.push_str(&format!(
                "{} terms in {} variables\n",
                p.terms().count(),
                p.nvars()
            ));
            out
        }
        Format::Json => {
            let terms: Vec<Value> = p
                .terms()
                .map(|(e, c)| json!({"exponent": e, "coeff": rat_to_json(c)}))
                .collect();
            format!("{}\n", json!({"nvars": p.nvars(), "terms": terms}))
        }
        Format::Csv => {
            let mut out = String::from("exponent,coeff\n");
            for (e, c) in p.terms() {
                out.push_str(&format!("{},{}\n", csv_field(&join_parts(e)), csv_rat(c)));
            }
            out
        }
    }
}

fn render_map<K: std::fmt::Display>(m: &BTreeMap<K, Rat>, format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            for (k, v) in m {
                out.push_str(&format!("({})  {}\n", k, format_rat(v)));
            }
            out.push_str(&format!("{} terms\n", m.len()));
            out
        }
        Format::Json => {
            let mut obj = serde_json::Map::new();
            for (k, v) in m {
                obj.insert(k.to_string(), rat_to_json(v));
            }
            format!("{}\n", Value::Object(obj))
        }
        Format::Csv => {
            let mut out = String::from("index,coeff\n");
            for (k, v) in m {
                out.push_str(&format!("{},{}\n", csv_field(&k.to_string()), csv_rat(v)));
            }
            out
        }
    }
}

fn run_expand(
    basis: &str,
    index: Option<String>,
    perm: Option<String>,
    code: Option<String>,
    nvars: Option<usize>,
    t: Option<String>,
    format: Format,
) -> CliResult {
    let b = AnyBasis::parse(basis)?;
    let poly = match b {
        AnyBasis::Poly(pb) => {
            let gamma = poly_index(&index, &perm, &code)?;
            let gamma = match nvars {
                Some(n) => gamma.padded(n)?,
                None => gamma,
            };
            expand_poly(pb, &gamma)?
        }
        _ => {
            let idx = need(index.as_deref(), "index")?;
            let n = need(nvars, "nvars")?;
            match b {
                AnyBasis::Classic(cb) => expand_classic(cb, &partition_arg(idx)?, n)?,
                AnyBasis::HallLittlewood => {
                    let t = parse_rat(need(t.as_deref(), "t")?)?;
                    hl_expand(&partition_arg(idx)?, &t, n)?
                }
                AnyBasis::SchurP => schur_p_expand(&partition_arg(idx)?, n)?,
                AnyBasis::Qsym(qb) => expand_qsym(qb, &composition_arg(idx)?, n)?,
                AnyBasis::Poly(_) => unreachable!(),
            }
        }
    };
    Ok((render_poly(&poly, format), 0))
}

fn finish_matrix<E: Clone + Ord + std::fmt::Display + IndexVec>(
    mat: TransitionMatrix<E>,
    inverse: bool,
    mode: InvertMode,
    format: Format,
) -> CliResult {
    let mat = if inverse { mat.invert(mode)? } else { mat };
    let text = match format {
        Format::Json => format!("{}\n", mat.to_json()),
        Format::Text => {
            let mut out = String::new();
            for ((r, c), v) in mat.entries() {
                out.push_str(&format!(
                    "({})  ({})  {}\n",
                    mat.poset().element(*r),
                    mat.poset().element(*c),
                    format_rat(v)
                ));
            }
            out.push_str(&format!(
                "{} nonzero entries over {} elements\n",
                mat.num_entries(),
                mat.poset().len()
            ));
            out
        }
        Format::Csv => {
            let mut out = String::from("row,col,coeff\n");
            for ((r, c), v) in mat.entries() {
                out.push_str(&format!(
                    "{},{},{}\n",
                    csv_field(&mat.poset().element(*r).to_string()),
                    csv_field(&mat.poset().element(*c).to_string()),
                    csv_rat(v)
                ));
            }
            out
        }
    };
    Ok((text, 0))
}

fn run_transition(
    basis: &str,
    degree: u32,
    nvars: Option<usize>,
    t: Option<String>,
    inverse: bool,
    mode: Mode,
    format: Format,
) -> CliResult {
    let im = mode.invert_mode();
    match AnyBasis::parse(basis)? {
        AnyBasis::Classic(cb) => finish_matrix(classic_matrix(cb, degree)?, inverse, im, format),
        AnyBasis::HallLittlewood => {
            let t = parse_rat(need(t.as_deref(), "t")?)?;
            finish_matrix(hl_matrix(degree, &t)?, inverse, im, format)
        }
        AnyBasis::SchurP => finish_matrix(hl_matrix(degree, &rat_int(-1))?, inverse, im, format),
        AnyBasis::Qsym(qb) => finish_matrix(qsym_matrix(qb, degree)?, inverse, im, format),
        AnyBasis::Poly(pb) => {
            let n = need(nvars, "nvars")?;
            finish_matrix(poly_matrix(pb, n, degree)?, inverse, im, format)
        }
    }
}

fn run_mobius(poset: &str, x: &str, y: &str, mode: Mode) -> CliResult {
    let xv = parse_parts(x)?;
    let yv = parse_parts(y)?;
    let (kx, ky): (u64, u64) = (
        xv.iter().map(|&p| p as u64).sum(),
        yv.iter().map(|&p| p as u64).sum(),
    );
    if kx != ky {
        return Err(Error::Parse(format!(
            "x and y must have the same size, got {kx} and {ky}"
        ))
        .into());
    }
    let k = u32::try_from(kx)
        .map_err(|_| Error::ResourceBound(format!("size {kx} is out of range")))?;
    let mu = match poset {
        "dominance-partitions" => {
            let a = Partition::new(xv)?;
            let b = Partition::new(yv)?;
            let p = partitions_poset(k);
            match mode {
                Mode::Chains => p.mobius(&a, &b)?,
                Mode::Backsub => p.mobius_backsub(&a, &b)?,
            }
        }
        "dominance-compositions" | "sorted-dominance" => {
            let a = StrongComposition::new(xv)?;
            let b = StrongComposition::new(yv)?;
            let p = if poset == "dominance-compositions" {
                strong_poset(k as usize, k)
            } else {
                strong_prime_poset(k as usize, k)
            };
            match mode {
                Mode::Chains => p.mobius(&a, &b)?,
                Mode::Backsub => p.mobius_backsub(&a, &b)?,
            }
        }
        "dominance-weak" | "lehmer" => {
            let a = WeakComposition::new(xv);
            let b = WeakComposition::new(yv);
            if a.len() != b.len() {
                return Err(Error::Parse(format!(
                    "x and y must have the same length, got {} and {}",
                    a.len(),
                    b.len()
                ))
                .into());
            }
            let p = if poset == "dominance-weak" {
                weak_poset(a.len(), k)
            } else {
                lehmer_poset(a.len(), k)
            };
            match mode {
                Mode::Chains => p.mobius(&a, &b)?,
                Mode::Backsub => p.mobius_backsub(&a, &b)?,
            }
        }
        other => {
            return Err(Error::Parse(format!(
                "unknown poset {other:?}; expected dominance-partitions, \
                 dominance-compositions, sorted-dominance, dominance-weak, or lehmer"
            ))
            .into())
        }
    };
    Ok((format!("{mu}\n"), 0))
}

fn run_mult(
    basis: &str,
    a: &str,
    b: &str,
    t: Option<String>,
    mode: Mode,
    format: Format,
) -> CliResult {
    let im = mode.invert_mode();
    let text = match AnyBasis::parse(basis)? {
        AnyBasis::Classic(cb) => render_map(
            &structure_constants_classic(cb, &partition_arg(a)?, &partition_arg(b)?, im)?,
            format,
        ),
        AnyBasis::HallLittlewood => {
            let t = parse_rat(need(t.as_deref(), "t")?)?;
            render_map(
                &hl_structure(&partition_arg(a)?, &partition_arg(b)?, &t, im)?,
                format,
            )
        }
        AnyBasis::SchurP => {
            let pa = partition_arg(a)?;
            let pb = partition_arg(b)?;
            for q in [&pa, &pb] {
                if !q.is_strict() {
                    return Err(Error::DegenerateParameter(format!(
                        "index ({q}) must have distinct parts"
                    ))
                    .into());
                }
            }
            let n = ((pa.size() + pb.size()) as usize).max(1);
            let prod = schur_p_expand(&pa, n)?.try_mul(&schur_p_expand(&pb, n)?)?;
            render_map(&extract_symmetric(&prod, &SymTarget::SchurP)?, format)
        }
        AnyBasis::Qsym(qb) => render_map(
            &qsym_structure(qb, &composition_arg(a)?, &composition_arg(b)?, im)?,
            format,
        ),
        AnyBasis::Poly(pb) => render_map(
            &poly_structure(pb, &weak_arg(a)?, &weak_arg(b)?, im)?,
            format,
        ),
    };
    Ok((text, 0))
}

fn run_plethysm(
    f: &str,
    flambda: &str,
    g: &str,
    gmu: &str,
    nvars: Option<usize>,
    out: PlethOut,
    mode: Mode,
    format: Format,
) -> CliResult {
    let fb = ClassicBasis::parse(f)?;
    let gb = ClassicBasis::parse(g)?;
    let lam = partition_arg(flambda)?;
    let mu = partition_arg(gmu)?;
    let needed = ((lam.size() * mu.size()) as usize).max(1);
    let n = nvars.unwrap_or(needed);
    if n < needed {
        return Err(Error::ResourceBound(format!(
            "plethysm of degree {} needs at least {needed} variables, got {n}",
            lam.size() * mu.size()
        ))
        .into());
    }
    let text = match out {
        PlethOut::Schur => {
            let coeffs = plethysm_in_schur(fb, &lam, gb, &mu, mode.invert_mode())?;
            render_map(&coeffs, format)
        }
        PlethOut::Monomial => {
            let poly = plethysm_poly(fb, &lam, gb, &mu, n)?;
            let target = SymTarget::Classic(ClassicBasis::Monomial);
            render_map(&extract_symmetric(&poly, &target)?, format)
        }
    };
    Ok((text, 0))
}

fn run_bridge(basis: &str, coeffs: &str, mode: Mode, format: Format) -> CliResult {
    let qb = QsymBasis::parse(basis)?;
    let raw = if coeffs == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Parse(format!("reading stdin: {e}")))?;
        buf
    } else {
        coeffs.to_string()
    };
    let value: Value = serde_json::from_str(&raw)
        .map_err(|e| Error::Parse(format!("coefficient map is not valid JSON: {e}")))?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::Parse("coefficient map must be a JSON object".into()))?;
    let mut map: BTreeMap<StrongComposition, Rat> = BTreeMap::new();
    for (key, val) in obj {
        map.insert(composition_arg(key)?, rat_from_json(val)?);
    }
    let schur = xbasis::bridge::schur_from_qsym(qb, &map, mode.invert_mode())?;
    Ok((render_map(&schur, format), 0))
}

fn run_verify(suite: &str, format: Format) -> CliResult {
    let report = verify_suite(suite).map_err(|e| {
        if let Error::UnknownSuite(_) = e {
            Failure::Domain(Error::UnknownSuite(format!(
                "{suite} (expected one of: {})",
                suite_names().join(", ")
            )))
        } else {
            Failure::Domain(e)
        }
    })?;
    let text = match format {
        Format::Text => report.render_text(),
        Format::Json => format!("{}\n", report.to_json()),
        Format::Csv => {
            let mut out = String::from("id,status,detail\n");
            for case in &report.cases {
                out.push_str(&format!(
                    "{},{},{}\n",
                    csv_field(&case.id),
                    if case.pass { "pass" } else { "fail" },
                    csv_field(&case.detail)
                ));
            }
            out
        }
    };
    let code = if report.passed() { 0 } else { 1 };
    Ok((text, code))
}
