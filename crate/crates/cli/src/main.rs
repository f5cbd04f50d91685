use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nslen::corpus::{self, GroupSpec};
use nslen::freeword::FreeWord;
use nslen::grpstruct::{nonsolvable_length, rs_series_partial, LayerKind};
use nslen::laws::{self, LawStatus, NuValue, TheoremStatus, DEFAULT_BUDGET, DEFAULT_SEED};
use nslen::pncheck::{self, validate_certificate, PnCertificate, SearchMode};
use nslen::{Caps, Error, PermGroup};

mod report;

use report::{write_certificates, write_json, CampaignResult};

const EXIT_USAGE: u8 = 3;

#[derive(Parser)]
#[command(name = "nslen", version, about = "Non-solvable length, laws and trajectory certificates for permutation groups")]
struct Cli {
    #[command(flatten)]
    caps: CapArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CapArgs {
    /// Largest group order whose elements may be listed
    #[arg(long, global = true, env = "NSLEN_ELEMENT_CAP", default_value_t = Caps::default().element_cap)]
    element_cap: u128,
    /// Largest index of a coset action
    #[arg(long, global = true, env = "NSLEN_INDEX_CAP", default_value_t = Caps::default().index_cap)]
    index_cap: u128,
    /// Largest number of word evaluations in an exhaustive law check
    #[arg(long, global = true, env = "NSLEN_TUPLE_CAP", default_value_t = Caps::default().tuple_cap)]
    tuple_cap: u128,
    /// Largest group order for subgroup-lattice enumeration
    #[arg(long, global = true, env = "NSLEN_FRATTINI_CAP", default_value_t = Caps::default().frattini_cap)]
    frattini_cap: u128,
    /// Largest number of Sylow conjugates tried per trajectory search
    #[arg(long, global = true, env = "NSLEN_SYLOW_CONJ_CAP", default_value_t = Caps::default().sylow_conj_cap)]
    sylow_conj_cap: u128,
}

impl CapArgs {
    fn caps(&self) -> Caps {
        Caps {
            element_cap: self.element_cap,
            index_cap: self.index_cap,
            tuple_cap: self.tuple_cap,
            frattini_cap: self.frattini_cap,
            sylow_conj_cap: self.sylow_conj_cap,
        }
    }
}

#[derive(Args)]
struct RunArgs {
    /// Random seed
    #[arg(long, env = "NSLEN_SEED", default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Worker threads for exhaustive scans
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Directory for reports and certificates
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the non-solvable length
    Lambda { group: PathBuf },
    /// Print the RS-series, one line per term
    RsSeries { group: PathBuf },
    /// Shortest law length up to a bound
    Nu {
        group: PathBuf,
        #[arg(long, default_value_t = 4)]
        max_length: usize,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Search for a tuple on which a word is not the identity
    Witness {
        group: PathBuf,
        #[arg(long)]
        word: FreeWord,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Check the trajectory property for all words of one length
    Pn {
        group: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Mode::Sylow2)]
        mode: Mode,
        #[arg(long)]
        omega: Option<usize>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// No word of length at most lambda is a law (exact decision)
    VerifyTheoremA {
        group: PathBuf,
        #[command(flatten)]
        run: RunArgs,
    },
    /// No word of length at most lambda is a law (witness search only)
    VerifyTheoremB {
        group: PathBuf,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Trajectory certificates inside Sylow 2-subgroups at every point
    VerifyTheoremC {
        group: PathBuf,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Re-check a certificate file against a group file
    ValidateCert { certificate: PathBuf, group: PathBuf },
    /// Build a group and write it as a group file
    MakeGroup {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        q: Option<u64>,
        /// Base (wreath) or left factor (direct) group file
        #[arg(long)]
        base: Option<PathBuf>,
        /// Top (wreath) or right factor (direct) group file
        #[arg(long)]
        top: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Tabulate lambda and a lower bound on nu for every group file in a directory
    Scan {
        dir: PathBuf,
        #[arg(long, default_value_t = 4)]
        max_length: usize,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Any,
    Sylow2,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Symmetric,
    Alternating,
    Cyclic,
    Dihedral,
    Psl2,
    #[value(name = "psl3_3")]
    Psl33,
    Direct,
    Wreath,
}

/// A command failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure { code: EXIT_USAGE, message: message.into() }
    }

    fn from_error(e: Error) -> Failure {
        let code = match e {
            Error::CapExceeded { .. } | Error::OrderOverflow | Error::NoApplicablePath(_) => 2,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::usage(e.to_string())
    }
}

type Outcome = Result<u8, Failure>;

fn load(path: &Path) -> Result<PermGroup, Failure> {
    corpus::load(path).map_err(|e| Failure::usage(e.to_string()))
}

fn name_of(g: &PermGroup, path: &Path) -> String {
    g.name()
        .map(str::to_string)
        .unwrap_or_else(|| path.display().to_string())
}

fn status_code(s: TheoremStatus) -> u8 {
    s.exit_code() as u8
}

fn lambda(path: &Path, caps: &Caps) -> Outcome {
    let g = load(path)?;
    let l = nonsolvable_length(&g, caps).map_err(Failure::from_error)?;
    println!("{l}");
    Ok(0)
}

fn rs_series(path: &Path, caps: &Caps) -> Outcome {
    let g = load(path)?;
    let (layers, err) = rs_series_partial(&g, caps);
    for l in &layers {
        let kind = match l.kind {
            LayerKind::R => "R",
            LayerKind::S => "S",
        };
        let components = if l.components.is_empty() {
            "-".to_string()
        } else {
            l.components
                .iter()
                .map(|c| match c {
                    Some(c) => format!("{}x{}", c.count, c.order),
                    None => "?".to_string(),
                })
                .collect::<Vec<_>>()
                .join(",")
        };
        println!("{kind}_{}  order={}  components={components}", l.index, l.order);
    }
    match err {
        None => Ok(0),
        Some(e) => Err(Failure::from_error(e)),
    }
}

fn nu(path: &Path, max_length: usize, run: &RunArgs, caps: &Caps) -> Outcome {
    let g = load(path)?;
    let start = Instant::now();
    let r = laws::nu(&g, max_length, caps, run.seed, run.workers);
    println!("{r}");
    if let Some(out) = &run.out {
        let mut c = CampaignResult::new(&name_of(&g, path), run.seed);
        c.elapsed_seconds = start.elapsed().as_secs_f64();
        c.report = serde_json::to_value(&r).expect("report serializes");
        write_json(&out.join("nu.json"), &c)?;
    }
    let decided = r.undecided.is_empty() || matches!(r.value, NuValue::Exact(_));
    Ok(if decided { 0 } else { 2 })
}

fn witness(path: &Path, word: &FreeWord, budget: u64, run: &RunArgs) -> Outcome {
    let g = load(path)?;
    let r = laws::non_law_witness(&g, word, budget, run.seed);
    println!("{}: {}", r.word, r.status);
    let cycles: Option<Vec<String>> = r
        .witness
        .as_ref()
        .map(|t| t.iter().map(|x| x.to_string()).collect());
    if let Some(t) = &cycles {
        for (i, x) in t.iter().enumerate() {
            println!("  x{} = {x}", i + 1);
        }
    }
    if let Some(out) = &run.out {
        let mut c = CampaignResult::new(&name_of(&g, path), run.seed);
        c.report = serde_json::json!({
            "word": r.word,
            "status": r.status,
            "witness": cycles,
            "tuples_checked": r.tuples_checked,
            "phase": r.phase,
        });
        write_json(&out.join("witness.json"), &c)?;
    }
    Ok(if r.status == LawStatus::NonLawWitness { 0 } else { 2 })
}

fn pn(path: &Path, n: usize, mode: Mode, omega: Option<usize>, run: &RunArgs, caps: &Caps) -> Outcome {
    let g = load(path)?;
    if let Some(p) = omega {
        if p >= g.degree() {
            return Err(Failure::usage(format!("--omega {p} is not a point of degree {}", g.degree())));
        }
    }
    let mode = match mode {
        Mode::Any => SearchMode::Any,
        Mode::Sylow2 => SearchMode::Sylow2,
    };
    let start = Instant::now();
    let r = pncheck::check_pn(&g, n, mode, omega.map(|p| vec![p]), caps, run.seed);
    for w in &r.results {
        match (&w.certificate, &w.note) {
            (Some(c), _) => println!("{}: {} at omega={}", w.word, w.status, c.omega),
            (None, Some(note)) => println!("{}: {} ({note})", w.word, w.status),
            (None, None) => println!("{}: {}", w.word, w.status),
        }
    }
    println!("{}", r.status);
    if let Some(out) = &run.out {
        let mut c = CampaignResult::new(&name_of(&g, path), run.seed);
        write_certificates(&out.join("certificates"), r.certificates())?;
        c.certificates = Some(PathBuf::from("certificates"));
        c.elapsed_seconds = start.elapsed().as_secs_f64();
        c.report = serde_json::to_value(&r).expect("report serializes");
        write_json(&out.join("pn.json"), &c)?;
    }
    Ok(status_code(r.status))
}

#[derive(Clone, Copy)]
enum Theorem {
    A,
    B,
    C,
}

fn verify(path: &Path, which: Theorem, run: &RunArgs, caps: &Caps) -> Outcome {
    let g = load(path)?;
    let start = Instant::now();
    let mut c = CampaignResult::new(&name_of(&g, path), run.seed);
    let status = match which {
        Theorem::A | Theorem::B => {
            let r = match which {
                Theorem::A => laws::verify_theorem_a(&g, caps, run.seed),
                _ => pncheck::verify_theorem_b(&g, caps, run.seed),
            };
            if let Some(e) = &r.error {
                eprintln!("{e}");
            } else {
                c.lambda = Some(r.lambda);
            }
            for w in &r.words {
                if w.status != LawStatus::NonLawWitness {
                    eprintln!("{}: {}", w.word, w.status);
                }
            }
            c.report = serde_json::to_value(&r).expect("report serializes");
            r.status
        }
        Theorem::C => {
            let r = pncheck::verify_theorem_c(&g, caps, run.seed);
            if let Some(e) = &r.error {
                eprintln!("{e}");
            } else {
                c.lambda = Some(r.n);
            }
            for w in r.results.iter().filter(|w| w.status != TheoremStatus::Pass) {
                let note = w.note.as_deref().unwrap_or("");
                eprintln!("{} at omega={}: {} {note}", w.word, w.omega.unwrap_or(0), w.status);
            }
            if let Some(out) = &run.out {
                write_certificates(&out.join("certificates"), r.certificates())?;
                c.certificates = Some(PathBuf::from("certificates"));
            }
            c.report = serde_json::to_value(&r).expect("report serializes");
            r.status
        }
    };
    match which {
        Theorem::A => c.theorem_a = Some(status),
        Theorem::B => c.theorem_b = Some(status),
        Theorem::C => c.theorem_c = Some(status),
    }
    println!("{status}");
    if let Some(out) = &run.out {
        c.elapsed_seconds = start.elapsed().as_secs_f64();
        let file = match which {
            Theorem::A => "theorem-a.json",
            Theorem::B => "theorem-b.json",
            Theorem::C => "theorem-c.json",
        };
        write_json(&out.join(file), &c)?;
    }
    Ok(status_code(status))
}

fn validate_cert(cert: &Path, group: &Path) -> Outcome {
    let g = load(group)?;
    let text = fs::read_to_string(cert).map_err(|e| Failure::usage(format!("{}: {e}", cert.display())))?;
    let c = PnCertificate::from_json(&text).map_err(|e| Failure::usage(format!("{}: {e}", cert.display())))?;
    match validate_certificate(&c, &g) {
        Ok(()) => {
            println!("valid");
            Ok(0)
        }
        Err(e) => {
            println!("invalid: {e}");
            Ok(1)
        }
    }
}

fn make_group(
    kind: Kind,
    n: Option<usize>,
    q: Option<u64>,
    base: Option<PathBuf>,
    top: Option<PathBuf>,
    out: &Path,
) -> Outcome {
    let need_n = || n.ok_or_else(|| Failure::usage("--n is required for this kind"));
    let pair = |mk: fn(Box<GroupSpec>, Box<GroupSpec>) -> GroupSpec| -> Result<GroupSpec, Failure> {
        match (&base, &top) {
            (Some(a), Some(b)) => Ok(mk(
                Box::new(GroupSpec::File(a.clone())),
                Box::new(GroupSpec::File(b.clone())),
            )),
            _ => Err(Failure::usage("--base and --top are required for this kind")),
        }
    };
    let spec = match kind {
        Kind::Symmetric => GroupSpec::Symmetric(need_n()?),
        Kind::Alternating => GroupSpec::Alternating(need_n()?),
        Kind::Cyclic => GroupSpec::Cyclic(need_n()?),
        Kind::Dihedral => GroupSpec::Dihedral(need_n()?),
        Kind::Psl2 => GroupSpec::Psl2(q.ok_or_else(|| Failure::usage("--q is required for psl2"))?),
        Kind::Psl33 => GroupSpec::Psl3_3,
        Kind::Direct => pair(GroupSpec::Direct)?,
        Kind::Wreath => pair(GroupSpec::Wreath)?,
    };
    let g = corpus::make(&spec).map_err(|e| Failure::usage(e.to_string()))?;
    corpus::save(&g, out).map_err(|e| Failure::usage(e.to_string()))?;
    println!("{}  degree={}  order={}", g.name().unwrap_or("G"), g.degree(), g.order());
    Ok(0)
}

fn is_group_file(p: &Path) -> bool {
    let Some(name) = p.file_name().and_then(|s| s.to_str()) else {
        return false;
    };
    name.ends_with(".json") && !name.contains(".part")
}

fn scan(dir: &Path, max_length: usize, run: &RunArgs, caps: &Caps) -> Outcome {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| Failure::usage(format!("{}: {e}", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| is_group_file(p))
        .collect();
    files.sort();
    let mut rows = Vec::new();
    let mut code = 0;
    for path in &files {
        let g = match corpus::load(path) {
            Ok(g) => g,
            Err(e) => {
                println!("{}  error: {e}", path.display());
                code = 2;
                continue;
            }
        };
        let name = name_of(&g, path);
        let lambda = match nonsolvable_length(&g, caps) {
            Ok(l) => l.to_string(),
            Err(e) => {
                code = 2;
                format!("? ({e})")
            }
        };
        let r = laws::nu(&g, max_length, caps, run.seed, run.workers);
        let nu = match r.value {
            NuValue::Exact(n) => format!("nu={n}"),
            NuValue::GreaterThan(n) => format!("nu>{n}"),
        };
        println!("{name}  {lambda}  {nu}");
        rows.push(serde_json::json!({ "group": name, "lambda": lambda, "nu": nu }));
    }
    if let Some(out) = &run.out {
        write_json(&out.join("scan.json"), &rows)?;
    }
    Ok(code)
}

fn dispatch(cli: Cli) -> Outcome {
    let caps = cli.caps.caps();
    match cli.command {
        Command::Lambda { group } => lambda(&group, &caps),
        Command::RsSeries { group } => rs_series(&group, &caps),
        Command::Nu { group, max_length, run } => nu(&group, max_length, &run, &caps),
        Command::Witness { group, word, budget, run } => witness(&group, &word, budget, &run),
        Command::Pn { group, n, mode, omega, run } => pn(&group, n, mode, omega, &run, &caps),
        Command::VerifyTheoremA { group, run } => verify(&group, Theorem::A, &run, &caps),
        Command::VerifyTheoremB { group, run } => verify(&group, Theorem::B, &run, &caps),
        Command::VerifyTheoremC { group, run } => verify(&group, Theorem::C, &run, &caps),
        Command::ValidateCert { certificate, group } => validate_cert(&certificate, &group),
        Command::MakeGroup { kind, n, q, base, top, out } => make_group(kind, n, q, base, top, &out),
        Command::Scan { dir, max_length, run } => scan(&dir, max_length, &run, &caps),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match dispatch(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
