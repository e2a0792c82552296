//! Command-line front end. `thresh` in `main.rs` forwards here.

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::families::{cubic_checks, family_pair, verify_family, FamilyId};
use crate::hunt::{self, HuntOptions, THREADS_ENV};
use crate::num::{decimal_ceil, parse_positive};
use crate::poly::charpoly_oracle;
use crate::selftest;
use crate::seq::{adjacency_matrix, edge_count, parse_sequence, CreationSequence};
use crate::spectra::{self, characteristic_polynomial, spectral_summary, ENERGY_DECIMAL_PLACES};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const DEFAULT_PRECISION: &str = "1e-10";

#[derive(Parser, Debug)]
#[command(
    name = "thresh",
    version,
    about = "Exact spectra and energies of threshold graphs"
)]
struct Cli {
    /// Emit one JSON record instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Include wall-clock timing in the output.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Order, edges, blocks, multiplicities, characteristic polynomial and energy.
    Info {
        sequence: String,
        #[arg(long, default_value = DEFAULT_PRECISION)]
        precision: String,
    },
    /// Characteristic polynomial from the block formula.
    Charpoly {
        sequence: String,
        /// Also compute it from the adjacency matrix and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// Certified energy interval.
    Energy {
        sequence: String,
        #[arg(long, default_value = DEFAULT_PRECISION)]
        precision: String,
    },
    /// One member pair of an equienergetic family.
    Family {
        family: FamilyArg,
        #[arg(long = "i")]
        i: u64,
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value = "1e-9")]
        tol: String,
    },
    /// Search all connected threshold graphs of order N.
    Hunt {
        #[arg(long = "n")]
        n: usize,
        #[arg(long, default_value = DEFAULT_PRECISION)]
        precision: String,
        /// List borderenergetic candidates.
        #[arg(long)]
        borderenergetic: bool,
        /// Allow N above 24.
        #[arg(long)]
        allow_large: bool,
        /// Write every graph with its energy class to this CSV file.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Run the acceptance suite.
    Selftest,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    Four,
    Six,
}

impl From<FamilyArg> for FamilyId {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Four => FamilyId::FourBlock,
            FamilyArg::Six => FamilyId::SixBlock,
        }
    }
}

/// The structured output of one invocation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub version: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timing_ms: Option<u64>,
}

impl OutputRecord {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("records serialize")
    }
}

struct Outcome {
    record: OutputRecord,
    text: String,
    verified: bool,
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("records serialize")
}

fn sequence_arg(text: &str) -> Result<CreationSequence> {
    parse_sequence(text)
}

fn record(command: &str, inputs: Value, result: Value) -> OutputRecord {
    OutputRecord {
        command: command.to_string(),
        inputs,
        result,
        version: env!("CARGO_PKG_VERSION").to_string(),
        timing_ms: None,
    }
}

fn interval_text(e: &spectra::EnergyInterval) -> String {
    format!(
        "[{}, {}]",
        crate::num::decimal_floor(&e.lo, ENERGY_DECIMAL_PLACES),
        decimal_ceil(&e.hi, ENERGY_DECIMAL_PLACES)
    )
}

fn info(text: &str, precision: &str) -> Result<Outcome> {
    let s = sequence_arg(text)?;
    let p = parse_positive(precision)?;
    let summary = spectral_summary(&s, &p)?;
    let edges = edge_count(&s);
    let mut result = Map::new();
    result.insert("sequence".into(), to_value(&s));
    result.insert("N".into(), json!(summary.order));
    result.insert("edges".into(), json!(edges));
    result.insert("blocks".into(), to_value(&s.to_blocks().counts()));
    if let Value::Object(rest) = to_value(&summary) {
        for (k, v) in rest {
            result.entry(k).or_insert(v);
        }
    }
    let mut out = String::new();
    out += &format!("sequence      {s}\n");
    out += &format!("word          {}\n", s.to_word());
    out += &format!("N             {}\n", summary.order);
    out += &format!("edges         {edges}\n");
    out += &format!("blocks        {:?}\n", s.to_blocks().counts());
    out += &format!("m0            {}\n", summary.m0);
    out += &format!("m-1           {}\n", summary.m_minus1);
    out += &format!("char poly     {}\n", summary.char_poly);
    out += &format!("factor        {}\n", summary.nontrivial_factor);
    out += &format!("energy        {}\n", interval_text(&summary.energy));
    Ok(Outcome {
        record: record(
            "info",
            json!({"sequence": text, "precision": precision}),
            Value::Object(result),
        ),
        text: out,
        verified: true,
    })
}

fn charpoly(text: &str, oracle: bool) -> Result<Outcome> {
    let s = sequence_arg(text)?;
    let p = characteristic_polynomial(&s);
    let mut result = Map::new();
    result.insert("sequence".into(), to_value(&s));
    result.insert("N".into(), json!(s.order()));
    result.insert("char_poly".into(), to_value(&p));
    let mut out = format!("{p}\n");
    let mut verified = true;
    if oracle {
        let q = charpoly_oracle(&adjacency_matrix(&s))?;
        verified = p == q;
        result.insert("oracle".into(), to_value(&q));
        result.insert("equal".into(), json!(verified));
        out += &format!("oracle: {q}\n");
        out += if verified {
            "verdict: equal\n"
        } else {
            "verdict: DIFFERENT\n"
        };
    }
    Ok(Outcome {
        record: record(
            "charpoly",
            json!({"sequence": text, "oracle": oracle}),
            Value::Object(result),
        ),
        text: out,
        verified,
    })
}

fn energy(text: &str, precision: &str) -> Result<Outcome> {
    let s = sequence_arg(text)?;
    let p = parse_positive(precision)?;
    let e = spectra::energy(&s, &p)?;
    let result = json!({
        "sequence": to_value(&s),
        "N": s.order(),
        "energy": to_value(&e),
        "width": decimal_ceil(&e.width(), ENERGY_DECIMAL_PLACES),
    });
    Ok(Outcome {
        record: record(
            "energy",
            json!({"sequence": text, "precision": precision}),
            result,
        ),
        text: format!("{}\n", interval_text(&e)),
        verified: true,
    })
}

fn family(f: FamilyId, i: u64, verify: bool, tol: &str) -> Result<Outcome> {
    let pair = family_pair(f, i)?;
    let mut result = Map::new();
    result.insert("pair".into(), to_value(&pair));
    let mut out = format!(
        "{f} i={i} N={}\nG  = {}\nG' = {}\n",
        pair.order, pair.g, pair.g_prime
    );
    let mut verified = true;
    if verify {
        let t = parse_positive(tol)?;
        let report = verify_family(f, i, &t)?;
        verified &= report.passed();
        for c in &report.details {
            out += &format!(
                "{} {}: {}\n",
                if c.passed { "ok  " } else { "FAIL" },
                c.check,
                c.message
            );
        }
        result.insert("verification".into(), to_value(&report));
        if f == FamilyId::FourBlock {
            let cubic = cubic_checks(i)?;
            verified &= cubic.claims_hold();
            for c in &cubic.details {
                let tag = if c.passed {
                    "ok  "
                } else if c.check == "q_at_minus_printed_form" {
                    "note"
                } else {
                    "FAIL"
                };
                out += &format!("{tag} cubic {}: {}\n", c.check, c.message);
            }
            result.insert("cubic_checks".into(), to_value(&cubic));
        }
        result.insert("passed".into(), json!(verified));
        out += if verified {
            "all checks passed\n"
        } else {
            "verification FAILED\n"
        };
    }
    Ok(Outcome {
        record: record(
            "family",
            json!({"family": f, "i": i, "verify": verify, "tol": tol}),
            Value::Object(result),
        ),
        text: out,
        verified,
    })
}

fn thread_pool() -> Result<Option<rayon::ThreadPool>> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(None);
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Error::OutOfRange {
            what: "thread count",
            detail: format!("{THREADS_ENV}={raw:?} is not a positive integer"),
        })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build()
        .map(Some)
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))
}

fn hunt_cmd(
    n: usize,
    precision: &str,
    border: bool,
    allow_large: bool,
    csv: Option<&PathBuf>,
) -> Result<Outcome> {
    let p = parse_positive(precision)?;
    let opts = HuntOptions {
        allow_large,
        parallel: true,
    };
    let started = Instant::now();
    let classes = match thread_pool()? {
        Some(pool) => pool.install(|| hunt::classify_with(n, &p, &opts))?,
        None => hunt::classify_with(n, &p, &opts)?,
    };
    if let Some(path) = csv {
        let file = std::fs::File::create(path).map_err(|e| Error::OutOfRange {
            what: "csv path",
            detail: format!("{}: {e}", path.display()),
        })?;
        hunt::write_csv(&classes, std::io::BufWriter::new(file))?;
    }
    let mut result = hunt::summarize(n, &p, classes);
    result.stats.elapsed_ms = Some(started.elapsed().as_millis() as u64);

    let st = &result.stats;
    let mut out = format!(
        "N={n}: {} graphs, {} energy classes, {} with noncospectral members, {} pairs ({} exactly equal)\n",
        st.graphs, st.energy_classes, st.equienergetic_classes, st.pairs, st.exactly_equal_pairs
    );
    for pair in &result.pairs {
        out += &format!("pair {} {} [{}]\n", pair.a, pair.b, pair.labels.join(", "));
    }
    if border {
        out += &format!(
            "borderenergetic candidates (E = {}): {}\n",
            2 * n - 2,
            result.borderenergetic.len()
        );
        for c in &result.borderenergetic {
            out += &format!("candidate {} {}\n", c.sequence, interval_text(&c.energy));
        }
    }
    Ok(Outcome {
        record: record(
            "hunt",
            json!({"n": n, "precision": precision, "borderenergetic": border, "allow_large": allow_large}),
            to_value(&result),
        ),
        text: out,
        verified: true,
    })
}

fn selftest_cmd() -> Outcome {
    let outcomes = selftest::run_all();
    let verified = outcomes.iter().all(|o| o.passed);
    let mut text: String = outcomes.iter().map(|o| o.line() + "\n").collect();
    text += &format!(
        "{}/{} criteria passed\n",
        outcomes.iter().filter(|o| o.passed).count(),
        outcomes.len()
    );
    Outcome {
        record: record(
            "selftest",
            json!({}),
            json!({"criteria": outcomes, "passed": verified}),
        ),
        text,
        verified,
    }
}

fn strip_timing(v: &mut Value) {
    if let Some(stats) = v.get_mut("stats").and_then(Value::as_object_mut) {
        stats.remove("elapsed_ms");
    }
}

/// Runs one invocation and returns the exit code. `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let rendered = e.to_string();
            let first = rendered.lines().next().unwrap_or("invalid arguments");
            let _ = writeln!(err, "error: usage: {}", first.trim_start_matches("error: "));
            return EXIT_USAGE;
        }
    };
    let started = Instant::now();
    let outcome = match &cli.command {
        Command::Info {
            sequence,
            precision,
        } => info(sequence, precision),
        Command::Charpoly { sequence, oracle } => charpoly(sequence, *oracle),
        Command::Energy {
            sequence,
            precision,
        } => energy(sequence, precision),
        Command::Family {
            family: f,
            i,
            verify,
            tol,
        } => family((*f).into(), *i, *verify, tol),
        Command::Hunt {
            n,
            precision,
            borderenergetic,
            allow_large,
            csv,
        } => hunt_cmd(*n, precision, *borderenergetic, *allow_large, csv.as_ref()),
        Command::Selftest => Ok(selftest_cmd()),
    };
    let mut outcome = match outcome {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "error: {}: {}", e.kind(), e);
            return EXIT_USAGE;
        }
    };
    if cli.timing {
        outcome.record.timing_ms = Some(started.elapsed().as_millis() as u64);
    } else {
        strip_timing(&mut outcome.record.result);
    }
    if cli.json {
        let _ = writeln!(out, "{}", outcome.record.to_json());
    } else {
        let _ = write!(out, "{}", outcome.text);
        if let Some(ms) = outcome.record.timing_ms {
            let _ = writeln!(out, "time {ms} ms");
        }
    }
    if outcome.verified {
        EXIT_OK
    } else {
        EXIT_VERIFICATION_FAILED
    }
}
