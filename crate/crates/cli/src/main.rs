use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use lcseq::enumerate::{self, ComplexityHistogram, Method};
use lcseq::field::is_prime_power;
use lcseq::lfsr::{self, LfsrSpec};
use lcseq::oss::{self, OssParams};
use lcseq::rsbridge::{self, RsParams};
use lcseq::text;
use lcseq::verify::{self, Formulas, Suite};
use lcseq::{Error, Field, Sequence};

const DEFAULT_GUARD: u64 = 1 << 24;
const GUARD_ENV: &str = "LCSEQ_MAX_ORACLE";

#[derive(Parser)]
#[command(
    name = "lcseq",
    version,
    about = "Linear complexity of sequences over finite fields"
)]
struct Cli {
    /// Lift the size guards on brute-force paths.
    #[arg(long, global = true)]
    force: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct FieldArgs {
    /// Field characteristic.
    #[arg(long)]
    p: u64,
    /// Extension degree.
    #[arg(long, default_value_t = 1)]
    m: u32,
    /// Monic irreducible modulus, low-to-high coefficients (e.g. "1,1,1").
    /// Defaults to the first irreducible one when m > 1.
    #[arg(long)]
    modulus: Option<String>,
}

#[derive(Args)]
struct SeqInput {
    /// Inline sequence, whitespace-separated elements.
    #[arg(long, conflicts_with = "input")]
    seq: Option<String>,
    /// Sequence file, one sequence per line.
    #[arg(long = "in", value_name = "PATH")]
    input: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the linear complexity of each sequence.
    Lc {
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        input: SeqInput,
        /// Use the exhaustive register search instead of Berlekamp-Massey.
        #[arg(long)]
        oracle: bool,
    },
    /// Print L with the connection and feedback polynomials.
    Bm {
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        input: SeqInput,
    },
    /// Linear complexity distance L(a - b).
    Dist {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Run a register a_{i+l} = sum c_j a_{i+j} for n terms.
    Gen {
        #[command(flatten)]
        field: FieldArgs,
        /// c_0 .. c_{l-1}.
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        /// a_0 .. a_{l-1}.
        #[arg(long)]
        init: String,
        #[arg(long)]
        n: usize,
    },
    /// Optimal sequence sets: zero prefix of length n - k, message at the end.
    Oss {
        #[command(subcommand)]
        op: CodeOp,
    },
    /// Reed-Solomon code of length q - 1 over the nonzero elements.
    Rs {
        #[command(subcommand)]
        op: CodeOp,
    },
    /// Count sequences by linear complexity: at most r, or exactly r with
    /// --exact. Without --r, prints `r,count` lines of exact counts.
    Count {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, value_enum, default_value_t = MethodArg::Closed)]
        method: MethodArg,
        /// Count complexity exactly r instead of at most r.
        #[arg(long)]
        exact: bool,
        /// Restrict to sequences whose first nonzero term has index u.
        #[arg(long, requires = "r", conflicts_with = "exact")]
        u: Option<usize>,
    },
    /// Upper bounds on the size of a set with minimum distance d.
    Bound {
        #[arg(long, conflicts_with = "sphere", required_unless_present = "sphere")]
        singleton: bool,
        #[arg(long)]
        sphere: bool,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    /// Cross-check the formulas against brute force.
    Verify {
        /// lfsr, oss, enumerate, rsbridge, daykin or all.
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

#[derive(Subcommand)]
enum CodeOp {
    Encode {
        #[command(flatten)]
        field: FieldArgs,
        /// Code length (ignored for rs, where it is q - 1).
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        msg: String,
    },
    Decode {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        seq: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Closed,
    Recur,
    Sum,
    Brute,
}

enum Failure {
    Usage(String),
    Lib(Error),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let guard = match guard(cli.force) {
        Ok(g) => g,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
    };
    let result = run(cli.command, guard);
    let (out, code) = match result {
        Ok(out) => (out, 0),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            (String::new(), 1)
        }
        Err(Failure::Verify) => (String::new(), 4),
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::DecodeFailure(_) => 2,
                Error::OracleTooLarge(_) | Error::TooLarge(_) => 3,
                _ => 1,
            };
            (String::new(), code)
        }
    };
    let mut stdout = io::stdout().lock();
    if stdout
        .write_all(out.as_bytes())
        .and_then(|_| stdout.flush())
        .is_err()
    {
        return ExitCode::from(1);
    }
    ExitCode::from(code)
}

fn guard(force: bool) -> Result<u64, String> {
    if force {
        return Ok(u64::MAX);
    }
    match std::env::var(GUARD_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| format!("{GUARD_ENV} must be an integer, got `{v}`")),
        Err(_) => Ok(DEFAULT_GUARD),
    }
}

fn build_field(args: &FieldArgs) -> Result<Field, Failure> {
    let modulus = match &args.modulus {
        None if args.m > 1 => {
            let q = args
                .p
                .checked_pow(args.m)
                .ok_or_else(|| Failure::Usage("field too large".into()))?;
            if !lcseq::field::is_prime(args.p) {
                return Err(Error::NotPrime(args.p).into());
            }
            return Ok(Field::of_order(q)?);
        }
        None => None,
        Some(text) => Some(
            text.trim_matches(|c| c == '[' || c == ']')
                .split(',')
                .map(|c| {
                    c.trim()
                        .parse::<u64>()
                        .map_err(|_| Failure::Usage(format!("bad modulus coefficient `{c}`")))
                })
                .collect::<Result<Vec<_>, _>>()?,
        ),
    };
    Ok(Field::new(args.p, args.m, modulus.as_deref())?)
}

fn read_sequences(field: &Field, input: &SeqInput) -> Result<Vec<Sequence>, Failure> {
    match (&input.seq, &input.input) {
        (Some(s), None) => Ok(vec![text::parse_sequence(s, field)?]),
        (None, Some(path)) => {
            let body =
                fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
            Ok(text::parse_sequence_file(&body, Some(field))?)
        }
        _ => Err(Failure::Usage("give exactly one of --seq or --in".into())),
    }
}

fn check_q(q: u64) {
    if !is_prime_power(q) {
        eprintln!("warning: {q} is not a prime power; no field of that order exists");
    }
}

fn run(cmd: Command, guard: u64) -> Outcome {
    match cmd {
        Command::Lc {
            field,
            input,
            oracle,
        } => {
            let f = build_field(&field)?;
            let mut out = String::new();
            for s in read_sequences(&f, &input)? {
                let l = if oracle {
                    lfsr::min_lfsr_oracle_limited(&s, guard)?
                } else {
                    lfsr::linear_complexity(&s)
                };
                out.push_str(&format!("{l}\n"));
            }
            Ok(out)
        }
        Command::Bm { field, input } => {
            let f = build_field(&field)?;
            let reports: Vec<String> = read_sequences(&f, &input)?
                .iter()
                .map(|s| text::format_bm(&lfsr::berlekamp_massey(s)))
                .collect();
            Ok(reports.join("\n"))
        }
        Command::Dist { field, a, b } => {
            let f = build_field(&field)?;
            let a = text::parse_sequence(&a, &f)?;
            let b = text::parse_sequence(&b, &f)?;
            Ok(format!("{}\n", lfsr::lc_distance(&a, &b)?))
        }
        Command::Gen {
            field,
            coeffs,
            init,
            n,
        } => {
            let f = build_field(&field)?;
            let coeffs = text::parse_elements(&coeffs, &f)?;
            let init = text::parse_elements(&init, &f)?;
            let spec = LfsrSpec::new(&f, coeffs, init)?;
            Ok(format!(
                "{}\n",
                text::format_sequence(&lfsr::lfsr_generate(&spec, n))
            ))
        }
        Command::Oss { op } => run_oss(op),
        Command::Rs { op } => run_rs(op),
        Command::Count {
            q,
            n,
            r,
            method,
            exact,
            u,
        } => run_count(q, n, r, method, exact, u, guard),
        Command::Bound {
            singleton, q, n, d, ..
        } => {
            check_q(q);
            let value = if singleton {
                oss::singleton_bound(q, n, d)?
            } else {
                enumerate::sphere_packing_bound(q, n, d)?
            };
            Ok(format!("{value}\n"))
        }
        Command::Verify { suite } => {
            let suite: Suite = suite.parse().map_err(Failure::Usage)?;
            let results = verify::run_suite(suite, &Formulas::default());
            let mut out = String::new();
            for r in &results {
                out.push_str(&format!("{r}\n"));
            }
            if results.iter().all(|r| r.passed) {
                Ok(out)
            } else {
                print!("{out}");
                Err(Failure::Verify)
            }
        }
    }
}

fn run_oss(op: CodeOp) -> Outcome {
    match op {
        CodeOp::Encode { field, n, k, msg } => {
            let f = build_field(&field)?;
            let n = n.ok_or_else(|| Failure::Usage("oss needs --n".into()))?;
            let params = OssParams::new(&f, n, k)?;
            let msg = text::parse_elements(&msg, &f)?;
            Ok(format!(
                "{}\n",
                text::format_sequence(&oss::oss_encode(&params, &msg)?)
            ))
        }
        CodeOp::Decode { field, n, k, seq } => {
            let f = build_field(&field)?;
            let n = n.ok_or_else(|| Failure::Usage("oss needs --n".into()))?;
            let params = OssParams::new(&f, n, k)?;
            let recv = text::parse_sequence(&seq, &f)?;
            Ok(text::format_decode(&f, &oss::oss_decode(&params, &recv)?))
        }
    }
}

fn run_rs(op: CodeOp) -> Outcome {
    match op {
        CodeOp::Encode { field, k, msg, .. } => {
            let f = build_field(&field)?;
            let params = RsParams::new(&f, k)?;
            let msg = text::parse_elements(&msg, &f)?;
            Ok(format!(
                "{}\n",
                text::format_sequence(&rsbridge::rs_encode(&params, &msg)?)
            ))
        }
        CodeOp::Decode { field, k, seq, .. } => {
            let f = build_field(&field)?;
            let params = RsParams::new(&f, k)?;
            let recv = text::parse_sequence(&seq, &f)?;
            let (msg, error) = rsbridge::rs_decode_via_bm(&params, &recv)?;
            let codeword = recv.sub(&error)?;
            Ok(format!(
                "message: {}\nerror: {}\ncodeword: {}\n",
                text::format_elements(&f, &msg),
                text::format_sequence(&error),
                text::format_sequence(&codeword)
            ))
        }
    }
}

fn run_count(
    q: u64,
    n: usize,
    r: Option<usize>,
    method: MethodArg,
    exact: bool,
    u: Option<usize>,
    guard: u64,
) -> Outcome {
    check_q(q);
    if let Some(r) = r {
        if r > n {
            return Err(Failure::Usage(format!("need r <= n, got n = {n}, r = {r}")));
        }
    }
    let brute_field = || -> Result<Field, Failure> { Ok(Field::of_order(q)?) };

    if let (Some(r), Some(u)) = (r, u) {
        let value = match method {
            MethodArg::Brute => enumerate::brute_first_nonzero(&brute_field()?, n, r, u, guard)?,
            _ => enumerate::count_first_nonzero(q, n, r, u)?,
        };
        return Ok(format!("{value}\n"));
    }

    let Some(r) = r else {
        let histogram = match method {
            MethodArg::Brute => enumerate::brute_histogram_limited(&brute_field()?, n, guard)?,
            MethodArg::Closed => ComplexityHistogram::from_formula(q, n)?,
            MethodArg::Recur => ComplexityHistogram::from_balls(Method::Recur, q, n)?,
            MethodArg::Sum => ComplexityHistogram::from_balls(Method::Sum, q, n)?,
        };
        return Ok(text::format_histogram(&histogram));
    };
    let value = match method {
        MethodArg::Brute => {
            let h = enumerate::brute_histogram_limited(&brute_field()?, n, guard)?;
            if exact {
                h.counts()[r].clone()
            } else {
                h.cumulative(r)
            }
        }
        MethodArg::Closed if exact => enumerate::count_exact(q, n, r)?,
        m => {
            let method = match m {
                MethodArg::Recur => Method::Recur,
                MethodArg::Sum => Method::Sum,
                _ => Method::Closed,
            };
            let ball = enumerate::count_le(method, q, n, r)?;
            if exact && r > 0 {
                ball - enumerate::count_le(method, q, n, r - 1)?
            } else {
                ball
            }
        }
    };
    Ok(format!("{value}\n"))
}
