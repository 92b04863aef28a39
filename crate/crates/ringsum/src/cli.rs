//! Command-line front end.
//!
//! Results go to standard output (or `--out`) as JSON, one object per
//! line; sweeps write one line per cell followed by a summary line.
//! Timing and human-readable summaries go to standard error, so identical
//! invocations produce byte-identical standard output.
//!
//! Exit codes: 0 success, 1 a proved statement disagreed with an oracle,
//! 2 a verified counterexample to a conjecture, 3 invalid input.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ringsum_core::closed_form::{self as cf, ExponentProfile};
use ringsum_core::oracle::{self, PowerSumQuery};
use ringsum_core::ring::{validate_spec, Budget, RingSpec, DEFAULT_BUDGET};
use ringsum_core::words::{all_words, Monomial, MultiDegree};
use serde_json::{json, Value};

use crate::harness::{self, AuditConfig, CatalogConfig, Conjecture1Config, Family, FamilyConfig};
use crate::report::{Cell, ExitStatus, SweepReport};
use crate::{format, parallel, rings, spec_file, Error, Result};

#[derive(Parser, Debug)]
#[command(
    name = "ringsum",
    version,
    about = "Exact power sums of matrices over finite rings: closed forms, oracles and sweeps"
)]
struct Cli {
    /// Work cap per oracle call, in ring multiplications.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Worker threads; defaults to all cores.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Write results to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Closed-form values.
    #[command(subcommand)]
    Closed(Closed),
    /// Brute-force oracle values.
    #[command(subcommand)]
    Oracle(OracleCmd),
    /// Verification sweeps, emitted as JSON Lines.
    #[command(subcommand)]
    Sweep(Sweep),
    /// Ring-spec utilities.
    #[command(subcommand)]
    Ring(RingCmd),
}

/// A ring given by a spec file or a ring expression such as `null:2xzn:3`.
#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct RingSource {
    /// JSON ring-spec file.
    #[arg(long)]
    ring_spec: Option<PathBuf>,
    /// Ring expression: zn:N, gf:Q, gaussian:N, quaternion:N, null:M,
    /// trunc:P:S:DEG, t2:N, m2:N, joined by `x` for direct products.
    #[arg(long)]
    ring: Option<String>,
}

impl RingSource {
    fn load(&self) -> Result<RingSpec> {
        match (&self.ring_spec, &self.ring) {
            (Some(path), _) => spec_file::load(path),
            (_, Some(expr)) => rings::parse_ring(expr),
            _ => Err(Error::config("a ring is required")),
        }
    }
}

/// Extra rings for catalog-style sweeps; replace the default set if given.
#[derive(Args, Debug)]
struct RingList {
    #[arg(long)]
    ring_spec: Vec<PathBuf>,
    #[arg(long)]
    ring: Vec<String>,
}

impl RingList {
    fn load(&self) -> Result<Option<Vec<RingSpec>>> {
        if self.ring_spec.is_empty() && self.ring.is_empty() {
            return Ok(None);
        }
        let mut out: Vec<RingSpec> = self
            .ring_spec
            .iter()
            .map(|p| spec_file::load(p))
            .collect::<Result<_>>()?;
        for e in &self.ring {
            out.push(rings::parse_ring(e)?);
        }
        Ok(Some(out))
    }
}

#[derive(Subcommand, Debug)]
enum Closed {
    /// Sum of x^k over F_q.
    Field {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        k: u32,
    },
    /// Sum of x^k over Z_n.
    Zn {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u32,
    },
    /// Sum of z^k over Z_n[i].
    Gaussian {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u32,
    },
    /// S_k^d(F_q).
    FieldMatrix {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: u32,
    },
    /// S_k^d(Z_n).
    ZnMatrix {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: u32,
    },
    /// Sum of z^k over Z_n[i,j,k].
    Quaternion {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u32,
    },
    /// Predicted S_k^d(R) for a commutative ring.
    Predict {
        #[command(flatten)]
        ring: RingSource,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: u32,
    },
    /// Whether a module vanishing statement applies.
    ZeroGuarantee {
        #[arg(long)]
        p: u64,
        /// Exponents s_1 >= ... >= s_r.
        #[arg(long, value_delimiter = ',', required = true)]
        s: Vec<u32>,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: u32,
    },
    /// The stated joint exponent sum over x_i in 0..p^s.
    ExponentSum {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        s: u32,
        #[arg(long, value_delimiter = ',', required = true)]
        betas: Vec<u32>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Method {
    /// Enumerate every tuple of matrices.
    Direct,
    /// Contract per-variable moment tensors.
    Moments,
}

#[derive(Subcommand, Debug)]
enum OracleCmd {
    /// S_k^d(R) by enumeration of all d x d matrices.
    PowerSum {
        #[command(flatten)]
        ring: RingSource,
        #[arg(long)]
        d: usize,
        #[arg(long, required_unless_present = "k_max")]
        k: Option<u32>,
        /// Print every k up to this value.
        #[arg(long, conflicts_with = "k")]
        k_max: Option<u32>,
    },
    /// Sum of z^k over all ring elements.
    ElementSum {
        #[command(flatten)]
        ring: RingSource,
        #[arg(long, required_unless_present = "k_max")]
        k: Option<u32>,
        #[arg(long, conflicts_with = "k")]
        k_max: Option<u32>,
    },
    /// Sum of a word over integer matrix tuples, reduced mod the first modulus.
    Monomial {
        #[arg(long, value_delimiter = ',', required = true)]
        word: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        moduli: Vec<u64>,
        #[arg(long)]
        d: usize,
        #[arg(long, value_enum, default_value = "direct")]
        method: Method,
    },
    /// Sum over all words with the given multidegree, mod p.
    OmegaKappa {
        #[arg(long, value_delimiter = ',', required = true)]
        kappa: Vec<usize>,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum, default_value = "direct")]
        method: Method,
    },
    /// Joint sum of x_1^b_1 ... x_t^b_t over x_i in 0..n, mod n.
    ExponentSum {
        #[arg(long)]
        n: u64,
        #[arg(long, value_delimiter = ',', required = true)]
        betas: Vec<u32>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    Zn,
    Field,
    Gaussian,
    Quaternion,
}

#[derive(Subcommand, Debug)]
enum Sweep {
    /// Closed forms against oracles over a family grid.
    Family {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Parameter values (n or q); defaults depend on the family.
        #[arg(long, value_delimiter = ',')]
        values: Option<Vec<u64>>,
        #[arg(long, value_delimiter = ',')]
        d: Option<Vec<usize>>,
        #[arg(long)]
        k_max: Option<u32>,
    },
    /// S_k^d(n) ≡ (n/m)^{d^2} S_k^d(m) (mod m) for m | n.
    Reduction {
        #[arg(long, default_value_t = 12)]
        n_max: u64,
        /// Check a single pair instead of every m | n <= n-max.
        #[arg(long, requires = "n")]
        m: Option<u64>,
        #[arg(long, requires = "m")]
        n: Option<u64>,
        #[arg(long, value_delimiter = ',', default_value = "2")]
        d: Vec<usize>,
        #[arg(long, default_value_t = 8)]
        k_max: u32,
    },
    /// Prime-power lifting congruences for power sums, or with --monomial
    /// for words over mixed moduli.
    Lifting {
        #[arg(long, value_delimiter = ',')]
        p: Option<Vec<u64>>,
        /// Exponents s (power sums) or the profile s_1 >= ... >= s_r (--monomial).
        #[arg(long, value_delimiter = ',')]
        s: Option<Vec<u32>>,
        #[arg(long, value_delimiter = ',', default_value = "2")]
        d: Vec<usize>,
        #[arg(long, default_value_t = 8)]
        k_max: u32,
        #[arg(long)]
        monomial: bool,
        /// Words up to this length (--monomial).
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        /// A single word instead of all words (--monomial).
        #[arg(long, value_delimiter = ',')]
        word: Option<Vec<usize>>,
    },
    /// Stated exponent-sum formulas against the oracle.
    LemmaAudit {
        #[arg(long, value_delimiter = ',', default_value = "2,3,5")]
        p: Vec<u64>,
        /// Largest s for every prime; default 3 for p = 2 and 2 otherwise.
        #[arg(long)]
        s_max: Option<u32>,
        #[arg(long, default_value_t = 3)]
        tau_max: usize,
        #[arg(long, default_value_t = 8)]
        beta_max: u32,
    },
    /// Monomial sums over mixed prime-power moduli.
    Conjecture1 {
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        p: Vec<u64>,
        #[arg(long, default_value_t = 2)]
        d: usize,
        /// Exponent profiles separated by ';', e.g. "1,1;2,1;2,2".
        #[arg(long, default_value = "1,1;2,1;2,2")]
        profiles: String,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
    },
    /// Sums over all words of a multidegree, p = d = 2.
    Conjecture2 {
        /// Multidegrees separated by ';', e.g. "1,1;2,2,2".
        #[arg(long, default_value = "1,1;2,1;2,2;1,1,1;2,2,2")]
        kappa: String,
    },
    /// General prediction against oracle over a ring catalog.
    Catalog {
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        d: Vec<usize>,
        #[arg(long, default_value_t = 8)]
        k_max: u32,
        #[command(flatten)]
        rings: RingList,
    },
    /// Soundness of the module vanishing statements over a ring catalog.
    Guarantees {
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        d: Vec<usize>,
        #[arg(long, default_value_t = 8)]
        k_max: u32,
        #[command(flatten)]
        rings: RingList,
    },
    /// Nonvanishing of S_n^2(n) mod n against n ≡ 6 (mod 12).
    A017593 {
        #[arg(long, default_value_t = 18)]
        n_max: u64,
        #[arg(long, default_value_t = 100)]
        predicate_max: u64,
    },
    /// Oracle sums over non-commutative rings, recorded only.
    Noncommutative {
        #[arg(long, value_delimiter = ',', default_value = "2")]
        d: Vec<usize>,
        #[arg(long, default_value_t = 8)]
        k_max: u32,
        #[command(flatten)]
        rings: RingList,
    },
}

#[derive(Subcommand, Debug)]
enum RingCmd {
    /// Check the ring laws of a spec file.
    Validate {
        #[arg(long)]
        ring_spec: PathBuf,
    },
    /// Print the spec of a built-in ring expression.
    Builtin {
        #[arg(long)]
        ring: String,
    },
}

/// What a command produced: standard output text, diagnostics for
/// standard error, and the exit status.
struct Output {
    body: String,
    diagnostics: Vec<String>,
    status: i32,
}

impl Output {
    fn lines(values: impl IntoIterator<Item = Value>) -> Self {
        let mut body = String::new();
        for v in values {
            body.push_str(&v.to_string());
            body.push('\n');
        }
        Output {
            body,
            diagnostics: Vec::new(),
            status: 0,
        }
    }

    fn report(report: &SweepReport) -> Self {
        let mut buf = Vec::new();
        report.write_jsonl(&mut buf).expect("writing to memory");
        Output {
            body: String::from_utf8(buf).expect("JSON is UTF-8"),
            diagnostics: vec![report.human_summary()],
            status: report.exit_status().code(),
        }
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{text}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{text}");
                    ExitStatus::InvalidConfig.code()
                }
            };
        }
    };
    let start = Instant::now();
    let result = match cli.jobs {
        Some(0) => Err(Error::config("--jobs must be at least 1")),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::config(e.to_string()))
            .and_then(|pool| pool.install(|| execute(&cli))),
        None => execute(&cli),
    };
    match result {
        Ok(out) => {
            for d in &out.diagnostics {
                let _ = writeln!(stderr, "{d}");
            }
            let _ = writeln!(stderr, "elapsed: {:.3?}", start.elapsed());
            let written = match &cli.out {
                Some(path) => fs::write(path, &out.body).map_err(|source| Error::Io {
                    path: path.clone(),
                    source,
                }),
                None => stdout.write_all(out.body.as_bytes()).map_err(|source| Error::Io {
                    path: PathBuf::from("<stdout>"),
                    source,
                }),
            };
            match written {
                Ok(()) => out.status,
                Err(e) => {
                    let _ = writeln!(stderr, "error: {e}");
                    ExitStatus::InvalidConfig.code()
                }
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            ExitStatus::InvalidConfig.code()
        }
    }
}

fn execute(cli: &Cli) -> Result<Output> {
    let budget = Budget::new(cli.budget);
    match &cli.command {
        Command::Closed(c) => closed(c, budget),
        Command::Oracle(o) => oracle_cmd(o, budget),
        Command::Sweep(s) => sweep(s, budget),
        Command::Ring(r) => ring_cmd(r),
    }
}

/// Largest `n` for which the Gaussian prime set is computed by trial
/// division.
const FACTOR_LIMIT: u64 = 1_000_000;

fn closed(c: &Closed, budget: Budget) -> Result<Output> {
    let r = match c {
        Closed::Field { q, k } => cf::field_scalar_sum(*q, *k)?,
        Closed::Zn { n, k } => cf::zn_scalar_sum(*n, *k)?,
        Closed::Gaussian { n, k } => {
            if *n > FACTOR_LIMIT {
                return Err(Error::config(format!("n must be at most {FACTOR_LIMIT}")));
            }
            cf::gaussian_scalar_sum(*n, *k)?
        }
        Closed::FieldMatrix { q, d, k } => cf::field_matrix_sum(*q, *d, *k)?,
        Closed::ZnMatrix { n, d, k } => cf::zn_matrix_sum(*n, *d, *k)?,
        Closed::Quaternion { n, k } => cf::quaternion_sum(*n, *k)?,
        Closed::Predict { ring, d, k } => cf::predict_ring_matrix_sum(&ring.load()?, *d, *k, budget)?,
        Closed::ZeroGuarantee { p, s, d, k } => {
            let g = cf::zero_guarantee(*p, s, *d, *k)?;
            return Ok(Output::lines([json!({
                "guaranteed": g.guaranteed,
                "which": g.which.as_str(),
                "p": g.p,
                "exponents": g.exponents,
                "r": g.r,
                "d": g.d,
                "k": g.k,
            })]));
        }
        Closed::ExponentSum { p, s, betas } => {
            let profile = ExponentProfile::new(*p, *s, betas.clone())?;
            let r = cf::printed_scalar_exponent_sum(&profile);
            return Ok(Output::lines([json!({
                "p": p,
                "s": s,
                "betas": betas,
                "ones": profile.ones(),
                "evens": profile.evens(),
                "residue": r.residue,
                "modulus": r.modulus,
                "branch": r.branch.as_str(),
                "endorsed": r.endorsed,
            })]));
        }
    };
    Ok(Output::lines([format::closed_form(&r)]))
}

fn k_range(k: Option<u32>, k_max: Option<u32>) -> Result<(u32, u32)> {
    match (k, k_max) {
        (_, Some(0)) | (Some(0), _) => Err(ringsum_core::Error::ZeroExponent.into()),
        (Some(k), None) => Ok((k, k)),
        (None, Some(m)) => Ok((1, m)),
        _ => Err(Error::config("give exactly one of --k and --k-max")),
    }
}

fn oracle_cmd(o: &OracleCmd, budget: Budget) -> Result<Output> {
    match o {
        OracleCmd::PowerSum { ring, d, k, k_max } => {
            let spec = ring.load()?;
            let (lo, hi) = k_range(*k, *k_max)?;
            let sums = if lo == hi && *d > 0 && spec.card() > ringsum_core::ring::TABLE_LIMIT as u128 {
                vec![oracle::matrix_power_sum_slow(PowerSumQuery { spec: &spec, d: *d, k: hi }, budget)?]
            } else {
                let all = parallel::power_sums(&spec, *d, hi, budget)?;
                all[lo as usize - 1..].to_vec()
            };
            Ok(Output::lines((lo..=hi).zip(&sums).map(|(k, m)| {
                json!({"ring": spec.name(), "d": d, "k": k, "value": format::matrix(m)})
            })))
        }
        OracleCmd::ElementSum { ring, k, k_max } => {
            let spec = ring.load()?;
            let (lo, hi) = k_range(*k, *k_max)?;
            let sums = oracle::element_power_sums(&spec, hi, budget)?;
            Ok(Output::lines((lo..=hi).map(|k| {
                json!({"ring": spec.name(), "k": k, "value": format::element(&sums[k as usize - 1])})
            })))
        }
        OracleCmd::Monomial { word, moduli, d, method } => {
            let w = Monomial::new(word.clone())?;
            let s = match method {
                Method::Direct => oracle::monomial_sum_oracle(&w, moduli, *d, budget)?,
                Method::Moments => oracle::monomial_sum_by_moments(&w, moduli, *d, budget)?,
            };
            Ok(Output::lines([json!({
                "word": w.to_string(),
                "moduli": moduli,
                "d": d,
                "modulus": s.modulus,
                "value": format::int_matrix(&s),
            })]))
        }
        OracleCmd::OmegaKappa { kappa, d, p, method } => {
            let kp = MultiDegree::new(kappa.clone())?;
            let s = match method {
                Method::Direct => oracle::omega_kappa_sum_oracle(&kp, *d, *p, budget)?,
                Method::Moments => oracle::omega_kappa_sum_by_moments(&kp, *d, *p, budget)?,
            };
            Ok(Output::lines([json!({
                "kappa": kappa,
                "d": d,
                "p": p,
                "words": kp.word_count().map(|c| c as u64),
                "value": format::int_matrix(&s),
            })]))
        }
        OracleCmd::ExponentSum { n, betas } => {
            if *n < 2 {
                return Err(Error::config("modulus must be at least 2"));
            }
            budget.check(Some(*n as u128 * betas.len() as u128))?;
            Ok(Output::lines([json!({
                "modulus": n,
                "betas": betas,
                "value": oracle::scalar_exponent_sum_oracle(*n, betas),
            })]))
        }
    }
}

fn parse_lists<T: std::str::FromStr>(text: &str, what: &str) -> Result<Vec<Vec<T>>> {
    text.split(';')
        .map(|group| {
            group
                .split(',')
                .map(|x| {
                    x.trim()
                        .parse()
                        .map_err(|_| Error::config(format!("bad {what} entry {x:?}")))
                })
                .collect()
        })
        .collect()
}

fn sweep(s: &Sweep, budget: Budget) -> Result<Output> {
    let report = match s {
        Sweep::Family { family, values, d, k_max } => {
            let fam = match family {
                FamilyArg::Zn => Family::Zn,
                FamilyArg::Field => Family::Field,
                FamilyArg::Gaussian => Family::Gaussian,
                FamilyArg::Quaternion => Family::Quaternion,
            };
            let mut cfg = FamilyConfig::default_for(fam);
            if let Some(v) = values {
                cfg.values = v.clone();
            }
            if let Some(d) = d {
                cfg.ds = d.clone();
            }
            if let Some(k) = k_max {
                cfg.k_max = *k;
            }
            harness::verify_family_sweep(&cfg, budget)?
        }
        Sweep::Reduction { n_max, m, n, d, k_max } => match (m, n) {
            (Some(m), Some(n)) => single_reduction(*m, *n, d, *k_max, budget)?,
            _ => harness::reduction_sweep(*n_max, d, *k_max, budget)?,
        },
        Sweep::Lifting {
            p,
            s,
            d,
            k_max,
            monomial,
            max_degree,
            word,
        } => {
            if *monomial {
                let p = match p.as_deref() {
                    None => 2,
                    Some([p]) => *p,
                    Some(_) => return Err(Error::config("--monomial takes a single prime")),
                };
                let profile = s.clone().unwrap_or_else(|| vec![2, 1]);
                let [d] = d.as_slice() else {
                    return Err(Error::config("--monomial takes a single dimension"));
                };
                let words = match word {
                    Some(w) => vec![Monomial::new(w.clone())?],
                    None => all_words(profile.len(), *max_degree),
                };
                harness::monomial_lifting_sweep(p, &profile, &words, *d, budget)?
            } else {
                let primes = p.clone().unwrap_or_else(|| vec![2, 3]);
                let exps = s.clone().unwrap_or_else(|| vec![1]);
                harness::lifting_sweep(&primes, &exps, d, *k_max, budget)?
            }
        }
        Sweep::LemmaAudit { p, s_max, tau_max, beta_max } => {
            let cfg = AuditConfig {
                primes: p
                    .iter()
                    .map(|&p| (p, s_max.unwrap_or(if p == 2 { 3 } else { 2 })))
                    .collect(),
                tau_max: *tau_max,
                beta_max: *beta_max,
            };
            harness::lemma_audit(&cfg)?
        }
        Sweep::Conjecture1 { p, d, profiles, max_degree } => {
            let cfg = Conjecture1Config {
                primes: p.clone(),
                d: *d,
                profiles: parse_lists(profiles, "profile")?,
                max_degree: *max_degree,
            };
            harness::conjecture1_sweep(&cfg, budget)?
        }
        Sweep::Conjecture2 { kappa } => {
            harness::conjecture2_sweep(&parse_lists(kappa, "kappa")?, budget)?
        }
        Sweep::Catalog { d, k_max, rings: list } => {
            let cat = list.load()?.unwrap_or_else(rings::default_catalog);
            let cfg = CatalogConfig { ds: d.clone(), k_max: *k_max };
            harness::ring_catalog_sweep(&cat, &cfg, budget)?
        }
        Sweep::Guarantees { d, k_max, rings: list } => {
            let cat = list.load()?.unwrap_or_else(rings::default_catalog);
            let cfg = CatalogConfig { ds: d.clone(), k_max: *k_max };
            harness::zero_guarantee_sweep(&cat, &cfg, budget)?
        }
        Sweep::A017593 { n_max, predicate_max } => {
            harness::a017593_sweep(*n_max, *predicate_max, budget)?
        }
        Sweep::Noncommutative { d, k_max, rings: list } => {
            let specs = list.load()?.unwrap_or_else(rings::noncommutative_probe_set);
            let cfg = CatalogConfig { ds: d.clone(), k_max: *k_max };
            harness::noncommutative_probe(&specs, &cfg, budget)?
        }
    };
    Ok(Output::report(&report))
}

fn single_reduction(m: u64, n: u64, ds: &[usize], k_max: u32, budget: Budget) -> Result<SweepReport> {
    let start = Instant::now();
    let mut cells = Vec::new();
    for &d in ds {
        for k in 1..=k_max {
            let c = harness::check_reduction(m, n, d, k, budget)?;
            let class = if c.pass {
                crate::report::Classification::ProvedMatch
            } else {
                crate::report::Classification::ProvedMismatch
            };
            cells.push(
                Cell::new("reduction", json!({"m": m, "n": n, "d": d, "k": k}), class)
                    .expected(json!(c.rhs), "m-divides-n")
                    .observed(json!(c.lhs)),
            );
        }
    }
    Ok(SweepReport::new("reduction", cells, start.elapsed()))
}

fn ring_cmd(r: &RingCmd) -> Result<Output> {
    match r {
        RingCmd::Validate { ring_spec } => {
            let spec = spec_file::load_unvalidated(ring_spec)?;
            let report = validate_spec(&spec);
            let violations: Vec<Value> = report
                .violations
                .iter()
                .map(|v| json!({"law": v.law.as_str(), "witness": v.witness}))
                .collect();
            let mut out = Output::lines([json!({
                "name": spec.name(),
                "ok": report.ok,
                "violations": violations,
                "observed_commutative": report.observed_commutative,
            })]);
            if !report.ok {
                out.status = ExitStatus::InvalidConfig.code();
            }
            Ok(out)
        }
        RingCmd::Builtin { ring } => {
            let spec = rings::parse_ring(ring)?;
            let mut out = Output::lines([]);
            out.body = spec_file::to_json(&spec) + "\n";
            Ok(out)
        }
    }
}
