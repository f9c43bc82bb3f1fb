//! `wpq` — command-line front end for the wcqsym kernel.
//!
//! Exit codes: 0 success, 1 verification failure (a `verify` suite or an
//! `oracle product` cross-check reported a mismatch), 2 usage or parse
//! error. Output is deterministic: identical invocations print identical
//! bytes.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use wcqsym::element::{Basis, Element};
use wcqsym::expand::expand;
use wcqsym::hopf::{antipode, coproduct};
use wcqsym::maps::{map_phi, map_phi_b, map_pi, map_rho, map_theta_big};
use wcqsym::oracle::{enumerate_enriched, enumerate_ordinary, realize, series_product};
use wcqsym::product::product_generators;
use wcqsym::rota_baxter::{rb_p, rb_p_hat};
use wcqsym::scalar::{self, Scalar};
use wcqsym::verify::{suite_all, suite_basis, suite_hopf, suite_oracle, suite_rb, CheckResult};
use wcqsym::wc::WeakComposition;
use wcqsym::word::poset_word;

const CEILING_VAR: &str = "WPQ_MAX_TOTAL_WEIGHT";
const DEFAULT_CEILING: u64 = 12;

#[derive(Parser)]
#[command(
    name = "wpq",
    version,
    about = "Exact computations with weak-composition quasisymmetric functions",
    long_about = "Exact computations with quasisymmetric functions indexed by weak \
                  compositions: basis expansions, products, Hopf operations, \
                  descent-to-peak maps, Rota-Baxter operators, brute-force \
                  enumeration oracles, and verification suites.\n\n\
                  Indices are written as comma-separated nonnegative integers \
                  (`2,0,1`) or `e` for the empty index. Rationals are `INT` or \
                  `INT/INT`. The environment variable WPQ_MAX_TOTAL_WEIGHT \
                  (default 12) caps the total weight (sum of parts plus number \
                  of zero parts) accepted anywhere, as a safety ceiling against \
                  runaway enumeration."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BasisArg {
    #[value(name = "M")]
    M,
    #[value(name = "F")]
    F,
    #[value(name = "K")]
    K,
}

impl BasisArg {
    fn basis(self) -> Basis {
        match self {
            BasisArg::M => Basis::M,
            BasisArg::F => Basis::F,
            BasisArg::K => Basis::K,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MapOp {
    /// Projection onto ordinary quasisymmetric functions (bases M or F)
    Phi,
    /// Descent-to-peak map on compositions (zero-free indices only)
    #[value(name = "theta")]
    ThetaSmall,
    /// Descent-to-peak map on all weak compositions (fundamental to peak)
    #[value(name = "Theta")]
    ThetaBig,
    /// Projection of the peak algebra onto its composition-indexed part
    Rho,
    /// Projection onto the zero-indexed subalgebra (bases F or K)
    Pi,
    /// Parameter-b deformation on the zero-indexed subalgebra (needs --b)
    #[value(name = "phi_b")]
    PhiB,
}

#[derive(Clone, Copy, ValueEnum)]
enum RbOp {
    /// Rota-Baxter operator of weight one (prepends a zero part)
    #[value(name = "P")]
    P,
    /// Companion operator on the peak basis
    #[value(name = "Phat")]
    Phat,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleMode {
    /// Enumerate enriched chain maps (realizes a peak symbol)
    Lambda,
    /// Enumerate ordinary chain maps (realizes a fundamental symbol)
    Gamma,
    /// Cross-check an algebraic product against the enumerated product
    Product,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Hopf,
    Rb,
    Oracle,
    Basis,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Expand one basis symbol in another basis
    Expand {
        /// Basis of the input symbol
        #[arg(long, value_enum)]
        from: BasisArg,
        /// Basis to expand into
        #[arg(long, value_enum)]
        to: BasisArg,
        /// Index of the symbol, e.g. `2,0,1` or `e`
        index: String,
    },
    /// Multiply two basis symbols
    Mul {
        #[arg(long, value_enum)]
        basis: BasisArg,
        first: String,
        second: String,
    },
    /// Coproduct of one basis symbol
    Comul {
        #[arg(long, value_enum)]
        basis: BasisArg,
        index: String,
    },
    /// Antipode of one basis symbol
    Antipode {
        #[arg(long, value_enum)]
        basis: BasisArg,
        index: String,
    },
    /// Apply a structure map to one basis symbol
    Map {
        #[arg(value_enum)]
        op: MapOp,
        /// Input basis where the map admits more than one (phi: M|F, pi: F|K)
        #[arg(long, value_enum)]
        basis: Option<BasisArg>,
        /// Deformation parameter for phi_b, e.g. `1/2`
        #[arg(long)]
        b: Option<String>,
        index: String,
    },
    /// Apply a Rota-Baxter operator to one basis symbol
    Rb {
        #[arg(value_enum)]
        op: RbOp,
        /// Input basis (required for P; Phat acts on the peak basis)
        #[arg(long, value_enum)]
        basis: Option<BasisArg>,
        index: String,
    },
    /// Canonical representative of an index's peak-equality class
    Tau { index: String },
    /// Descent set and peak set of an index
    Peaks { index: String },
    /// Brute-force enumeration oracles over truncated polynomial series
    Oracle {
        #[arg(value_enum)]
        mode: OracleMode,
        /// Number of variables to truncate to
        #[arg(long)]
        vars: u64,
        /// Basis for `product` mode
        #[arg(long, value_enum)]
        basis: Option<BasisArg>,
        first: String,
        /// Second index (`product` mode only)
        second: Option<String>,
    },
    /// List canonical class representatives of a given weight
    Basis {
        /// Weight (sum of parts)
        weight: u64,
        /// Largest number of zero parts to include
        #[arg(long, default_value_t = 3)]
        max_zeros: u64,
    },
    /// Run a verification suite and print one line per check
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Exhaustive ranges cover indices up to this total weight
        #[arg(long, default_value_t = 4)]
        max_total_weight: u64,
        /// Seed for the randomized checks
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

struct Outcome {
    text: String,
    code: u8,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: 0 }
    }
}

fn ceiling() -> Result<u64, String> {
    match std::env::var(CEILING_VAR) {
        Ok(text) => text.trim().parse().map_err(|_| {
            format!("{CEILING_VAR} must be a nonnegative integer, got `{text}`")
        }),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_CEILING),
        Err(err) => Err(format!("{CEILING_VAR}: {err}")),
    }
}

fn parse_index(text: &str, ceiling: u64) -> Result<WeakComposition, String> {
    let wc: WeakComposition = text.parse().map_err(|err| {
        format!("index `{text}`: {err} (expected `e` or comma-separated nonnegative integers)")
    })?;
    if wc.total_weight() > ceiling {
        return Err(format!(
            "index `{wc}` has total weight {}, above the safety ceiling {ceiling} (raise {CEILING_VAR} to allow it)",
            wc.total_weight()
        ));
    }
    Ok(wc)
}

fn parse_rational(text: &str) -> Result<Scalar, String> {
    scalar::parse(text).map_err(|err| format!("rational `{text}`: {err} (expected INT or INT/INT)"))
}

fn format_set(set: &std::collections::BTreeSet<u64>) -> String {
    let inner: Vec<String> = set.iter().map(u64::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

fn render_suite(results: &[CheckResult]) -> Outcome {
    let mut text = String::new();
    let passed = results.iter().filter(|r| r.passed).count();
    for result in results {
        text.push_str(&result.to_string());
        text.push('\n');
    }
    text.push_str(&format!("passed {passed} of {} checks\n", results.len()));
    let code = if passed == results.len() { 0 } else { 1 };
    Outcome { text, code }
}

fn run(command: Command, ceiling: u64) -> Result<Outcome, String> {
    match command {
        Command::Expand { from, to, index } => {
            let index = parse_index(&index, ceiling)?;
            let x = Element::generator(from.basis(), index);
            let expanded = expand(&x, to.basis()).map_err(|err| err.to_string())?;
            Ok(Outcome::ok(format!("{expanded}\n")))
        }
        Command::Mul { basis, first, second } => {
            let a = parse_index(&first, ceiling)?;
            let b = parse_index(&second, ceiling)?;
            Ok(Outcome::ok(format!("{}\n", product_generators(basis.basis(), &a, &b))))
        }
        Command::Comul { basis, index } => {
            let index = parse_index(&index, ceiling)?;
            let x = Element::generator(basis.basis(), index);
            Ok(Outcome::ok(format!("{}\n", coproduct(&x))))
        }
        Command::Antipode { basis, index } => {
            let index = parse_index(&index, ceiling)?;
            let x = Element::generator(basis.basis(), index);
            Ok(Outcome::ok(format!("{}\n", antipode(&x))))
        }
        Command::Map { op, basis, b, index } => {
            let index = parse_index(&index, ceiling)?;
            if b.is_some() && !matches!(op, MapOp::PhiB) {
                return Err("--b only applies to `map phi_b`".into());
            }
            let expect_basis = |given: Option<BasisArg>,
                                allowed: &[BasisArg],
                                default: BasisArg,
                                what: &str|
             -> Result<Basis, String> {
                let choice = given.unwrap_or(default);
                if allowed.contains(&choice) {
                    Ok(choice.basis())
                } else {
                    let names: Vec<&str> = allowed
                        .iter()
                        .map(|b| match b {
                            BasisArg::M => "M",
                            BasisArg::F => "F",
                            BasisArg::K => "K",
                        })
                        .collect();
                    Err(format!("map {what} is defined on basis {}", names.join(" or ")))
                }
            };
            let image = match op {
                MapOp::Phi => {
                    let basis =
                        expect_basis(basis, &[BasisArg::M, BasisArg::F], BasisArg::F, "phi")?;
                    map_phi(&Element::generator(basis, index))
                }
                MapOp::ThetaSmall => {
                    expect_basis(basis, &[BasisArg::F], BasisArg::F, "theta")?;
                    if !index.is_composition() {
                        return Err(format!(
                            "map theta acts on compositions; `{index}` has zero parts (use `map Theta` for weak compositions)"
                        ));
                    }
                    map_theta_big(&Element::generator(Basis::F, index))
                }
                MapOp::ThetaBig => {
                    expect_basis(basis, &[BasisArg::F], BasisArg::F, "Theta")?;
                    map_theta_big(&Element::generator(Basis::F, index))
                }
                MapOp::Rho => {
                    expect_basis(basis, &[BasisArg::K], BasisArg::K, "rho")?;
                    map_rho(&Element::generator(Basis::K, index))
                }
                MapOp::Pi => {
                    let basis =
                        expect_basis(basis, &[BasisArg::F, BasisArg::K], BasisArg::F, "pi")?;
                    map_pi(&Element::generator(basis, index))
                }
                MapOp::PhiB => {
                    expect_basis(basis, &[BasisArg::F], BasisArg::F, "phi_b")?;
                    let b = b.ok_or("map phi_b needs --b, e.g. --b 1/2")?;
                    let b = parse_rational(&b)?;
                    if index.weight() != 0 {
                        return Err(format!(
                            "map phi_b acts on the zero-indexed subalgebra; `{index}` has positive parts"
                        ));
                    }
                    map_phi_b(&Element::generator(Basis::F, index), &b)
                }
            };
            Ok(Outcome::ok(format!("{image}\n")))
        }
        Command::Rb { op, basis, index } => {
            let index = parse_index(&index, ceiling)?;
            let image = match op {
                RbOp::P => {
                    let basis = basis.ok_or("rb P needs --basis M, F, or K")?;
                    rb_p(&Element::generator(basis.basis(), index))
                }
                RbOp::Phat => {
                    if !matches!(basis, None | Some(BasisArg::K)) {
                        return Err("rb Phat is defined on basis K".into());
                    }
                    rb_p_hat(&Element::generator(Basis::K, index))
                }
            };
            Ok(Outcome::ok(format!("{image}\n")))
        }
        Command::Tau { index } => {
            let index = parse_index(&index, ceiling)?;
            Ok(Outcome::ok(format!("{}\n", index.canonical_form())))
        }
        Command::Peaks { index } => {
            let index = parse_index(&index, ceiling)?;
            Ok(Outcome::ok(format!(
                "descents: {}\npeaks: {}\n",
                format_set(&index.descent_set()),
                format_set(&index.peak_set())
            )))
        }
        Command::Oracle { mode, vars, basis, first, second } => {
            let a = parse_index(&first, ceiling)?;
            match mode {
                OracleMode::Lambda | OracleMode::Gamma => {
                    if second.is_some() {
                        return Err("oracle lambda/gamma take a single index".into());
                    }
                    if basis.is_some() {
                        return Err("--basis only applies to `oracle product`".into());
                    }
                    let word = poset_word(&a);
                    let series = match mode {
                        OracleMode::Lambda => enumerate_enriched(&word, vars),
                        _ => enumerate_ordinary(&word, vars),
                    };
                    Ok(Outcome::ok(format!("{series}\n")))
                }
                OracleMode::Product => {
                    let basis = basis.ok_or("oracle product needs --basis M, F, or K")?.basis();
                    let second = second.ok_or("oracle product needs two indices")?;
                    let b = parse_index(&second, ceiling)?;
                    let algebraic = realize(&product_generators(basis, &a, &b), vars);
                    let direct = series_product(
                        &realize(&Element::generator(basis, a), vars),
                        &realize(&Element::generator(basis, b), vars),
                    );
                    if algebraic == direct {
                        Ok(Outcome::ok(format!(
                            "{direct}\nroutes agree: enumerated product matches algebraic product\n"
                        )))
                    } else {
                        Ok(Outcome {
                            text: format!(
                                "route mismatch:\nalgebraic: {algebraic}\nenumerated: {direct}\n"
                            ),
                            code: 1,
                        })
                    }
                }
            }
        }
        Command::Basis { weight, max_zeros } => {
            if weight + max_zeros > ceiling {
                return Err(format!(
                    "weight {weight} with up to {max_zeros} zeros exceeds the safety ceiling {ceiling} (raise {CEILING_VAR} to allow it)"
                ));
            }
            let mut seen = std::collections::BTreeSet::new();
            for alpha in WeakComposition::enumerate(weight, max_zeros as usize) {
                seen.insert(alpha.canonical_form());
            }
            let mut text = String::new();
            for rep in seen {
                text.push_str(&format!("{rep}\n"));
            }
            Ok(Outcome::ok(text))
        }
        Command::Verify { suite, max_total_weight, seed } => {
            if max_total_weight > ceiling {
                return Err(format!(
                    "--max-total-weight {max_total_weight} exceeds the safety ceiling {ceiling} (raise {CEILING_VAR} to allow it)"
                ));
            }
            let results = match suite {
                SuiteArg::Hopf => suite_hopf(max_total_weight),
                SuiteArg::Rb => suite_rb(max_total_weight, seed),
                SuiteArg::Oracle => suite_oracle(max_total_weight),
                SuiteArg::Basis => suite_basis(max_total_weight),
                SuiteArg::All => suite_all(max_total_weight, seed),
            };
            Ok(render_suite(&results))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ceiling = match ceiling() {
        Ok(value) => value,
        Err(message) => {
            eprintln!("error: {message}");
            return ExitCode::from(2);
        }
    };
    match run(cli.command, ceiling) {
        Ok(outcome) => {
            // A consumer like `wpq ... | head` may close the pipe early;
            // treat that as a normal exit rather than a panic.
            use std::io::Write;
            if let Err(err) = std::io::stdout().write_all(outcome.text.as_bytes()) {
                if err.kind() != std::io::ErrorKind::BrokenPipe {
                    eprintln!("error: {err}");
                    return ExitCode::from(2);
                }
            }
            ExitCode::from(outcome.code)
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
