//! Command-line census of Cayley digraphs on dihedral groups.
//!
//! Exit codes: 0 success, 1 domain error, 2 usage error, 3 internal
//! invariant violation (a closed form produced a non-exact division, or
//! the verification suite found a mismatch). All results go to stdout,
//! diagnostics to stderr.

use std::panic;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use cayley_census::census::{self, CensusResult, Method, TableRow};
use cayley_census::oracle::DEFAULT_MAX_MASK_BITS;
use cayley_census::{cycles, dihedral, oracle, verify, CycleData, Error};

const MASK_BITS_ENV: &str = "CAYLEY_CENSUS_MAX_MASK_BITS";

#[derive(Parser)]
#[command(
    name = "cayley-census",
    version,
    about = "Counts Cayley digraphs on dihedral groups D_{2n} up to CI-isomorphism"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CycleMethod {
    /// Closed-form cycle counts.
    Formula,
    /// Cycle counts read off the explicit permutation.
    Perm,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountMethod {
    Burnside,
    Theorem,
    D6p,
    Oracle,
}

impl CountMethod {
    fn as_method(self) -> Method {
        match self {
            CountMethod::Burnside => Method::Burnside,
            CountMethod::Theorem => Method::Theorem,
            CountMethod::D6p => Method::D6p,
            CountMethod::Oracle => Method::Oracle,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableMethod {
    Burnside,
    Theorem,
    D6p,
}

impl TableMethod {
    fn as_method(self) -> Method {
        match self {
            TableMethod::Burnside => Method::Burnside,
            TableMethod::Theorem => Method::Theorem,
            TableMethod::D6p => Method::D6p,
        }
    }
}

#[derive(Args)]
struct FormatArg {
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Order of the automorphism u^i -> u^(ri), u^j v -> u^(rj+t) v of D_{2n}.
    Order {
        n: u64,
        r: u64,
        t: u64,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Cycle counts of that automorphism on the 2n-1 non-identity elements.
    Cycles {
        n: u64,
        r: u64,
        t: u64,
        /// Computation route.
        #[arg(long, value_enum, default_value = "formula")]
        method: CycleMethod,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Number of Cayley digraphs on D_{2n} up to CI-isomorphism.
    Count {
        n: u64,
        /// Computation route.
        #[arg(long, value_enum, default_value = "burnside")]
        method: CountMethod,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Closed-form count for D_{6p}, p a prime at least 5.
    D6p {
        p: u64,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Census over a list of group parameters.
    Table {
        /// Comma-separated n values.
        #[arg(long, value_delimiter = ',', conflicts_with = "p_list", required_unless_present = "p_list")]
        n_list: Vec<u64>,
        /// Comma-separated p values (rows for n = 3p).
        #[arg(long, value_delimiter = ',')]
        p_list: Vec<u64>,
        /// Computation route; defaults to d6p with --p-list, burnside otherwise.
        #[arg(long, value_enum)]
        method: Option<TableMethod>,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Run the cross-validation suite and report each invariant.
    Verify {
        /// Sweep bound for the n-indexed checks.
        #[arg(long, default_value_t = 35)]
        n_max: u64,
    },
}

fn main() {
    let cli = Cli::parse();
    let code = match panic::catch_unwind(|| run(cli)) {
        Ok(Ok(code)) => code,
        Ok(Err(err)) => {
            eprintln!("error: {err}");
            1
        }
        // panics only arise from exactness invariants; the panic hook has
        // already printed the message
        Err(_) => 3,
    };
    std::process::exit(code);
}

fn mask_bits_limit() -> Result<u32, i32> {
    match std::env::var(MASK_BITS_ENV) {
        Err(_) => Ok(DEFAULT_MAX_MASK_BITS),
        Ok(raw) => raw.parse().map_err(|_| {
            eprintln!("usage error: {MASK_BITS_ENV} must be an unsigned integer, got {raw:?}");
            2
        }),
    }
}

fn run(cli: Cli) -> cayley_census::Result<i32> {
    match cli.command {
        Command::Order { n, r, t, format } => {
            let order = dihedral::kappa(n, r, t)?;
            match format.format {
                Format::Text => println!("{order}"),
                Format::Json => println!("{}", json!({ "n": n, "r": r, "t": t, "order": order })),
                Format::Csv => {
                    println!("n,r,t,order");
                    println!("{n},{r},{t},{order}");
                }
            }
            Ok(0)
        }
        Command::Cycles { n, r, t, method, format } => {
            let aut = dihedral::Aut::new(n, r, t)?;
            let data = match method {
                CycleMethod::Formula => cycles::c_total(n, r, t)?,
                CycleMethod::Perm => oracle::cycle_data_via_permutation(&aut),
            };
            let method_name = match method {
                CycleMethod::Formula => "formula",
                CycleMethod::Perm => "perm",
            };
            print_cycle_data(&data, (n, r, t), method_name, format.format);
            Ok(0)
        }
        Command::Count { n, method, format } => {
            let result = match method {
                CountMethod::Burnside => census::burnside_count(n)?,
                CountMethod::Theorem => census::dci_census(n)?,
                CountMethod::D6p => {
                    if n % 3 != 0 {
                        return Err(Error::NotApplicable(format!("n = {n} is not of the form 3p")));
                    }
                    census::d6p_census(n / 3)?
                }
                CountMethod::Oracle => {
                    let limit = match mask_bits_limit() {
                        Ok(limit) => limit,
                        Err(code) => return Ok(code),
                    };
                    census::oracle_census(n, limit)?
                }
            };
            let p = if method == CountMethod::D6p { Some(n / 3) } else { None };
            print_census(&result, p, method.as_method(), format.format);
            Ok(0)
        }
        Command::D6p { p, format } => {
            let result = census::d6p_census(p)?;
            print_census(&result, Some(p), Method::D6p, format.format);
            Ok(0)
        }
        Command::Table { n_list, p_list, method, format } => {
            let from_p = !p_list.is_empty();
            let method = method
                .map(TableMethod::as_method)
                .unwrap_or(if from_p { Method::D6p } else { Method::Burnside });
            let ns: Vec<u64> = if from_p {
                p_list.iter().map(|&p| 3 * p).collect()
            } else {
                n_list
            };
            let rows = census::census_table(&ns, method);
            Ok(print_table(&rows, format.format))
        }
        Command::Verify { n_max } => {
            let mut failed = false;
            for report in verify::run_suite(n_max) {
                if report.passed() {
                    println!("PASS {} ({} cases)", report.name, report.cases);
                } else {
                    failed = true;
                    println!(
                        "FAIL {} ({} of {} cases)",
                        report.name, report.failures, report.cases
                    );
                    for sample in &report.samples {
                        eprintln!("  {sample}");
                    }
                }
            }
            if failed {
                eprintln!("verification failed");
                Ok(3)
            } else {
                println!("all invariants hold");
                Ok(0)
            }
        }
    }
}

fn print_cycle_data(data: &CycleData, subscripts: (u64, u64, u64), method: &str, format: Format) {
    let (n, r, t) = subscripts;
    let c_u: u64 = data.u_parts.iter().map(|&(_, c)| c).sum();
    match format {
        Format::Text => {
            println!("n = {n}, r = {r}, t = {t}, method = {method}");
            let parts: Vec<String> = data
                .u_parts
                .iter()
                .map(|&(d, c)| format!("{d}:{c}"))
                .collect();
            println!("u_parts: {}", parts.join(" "));
            println!("c_u = {c_u}");
            println!("c_v = {}", data.c_v);
            println!("total = {}", data.total);
        }
        Format::Json => {
            let u_parts: Vec<serde_json::Value> =
                data.u_parts.iter().map(|&(d, c)| json!([d, c])).collect();
            println!(
                "{}",
                json!({
                    "n": n, "r": r, "t": t, "method": method,
                    "u_parts": u_parts, "c_u": c_u, "c_v": data.c_v, "total": data.total,
                })
            );
        }
        Format::Csv => {
            println!("n,r,t,method,c_u,c_v,total");
            println!("{n},{r},{t},{method},{c_u},{},{}", data.c_v, data.total);
        }
    }
}

fn census_json(result: &CensusResult, p: Option<u64>, method: Method) -> serde_json::Value {
    // big integers as decimal strings so JSON consumers never overflow
    let mut value = json!({
        "n": result.n,
        "aut_order": result.aut_order,
        "burnside_sum": result.burnside_sum.to_string(),
        "orbit_count": result.orbit_count.to_string(),
        "dci": result.dci.tag.name(),
        "method": method.name(),
    });
    if let Some(p) = p {
        value["p"] = json!(p);
    }
    value
}

fn census_text(result: &CensusResult, method: Method) -> String {
    let what = match result.dci.tag {
        census::DciTag::KnownDci => "non-isomorphic Cayley digraphs",
        _ => "CI-equivalence classes of Cayley digraphs",
    };
    format!(
        "n = {}: {} {what} (|Aut| = {}, dci = {}, method = {})",
        result.n,
        result.orbit_count,
        result.aut_order,
        result.dci.tag.name(),
        method.name()
    )
}

const CSV_HEADER: &str = "n,p_or_empty,aut_order,orbit_count,dci,method";

fn census_csv_row(result: &CensusResult, p: Option<u64>, method: Method) -> String {
    format!(
        "{},{},{},{},{},{}",
        result.n,
        p.map(|p| p.to_string()).unwrap_or_default(),
        result.aut_order,
        result.orbit_count,
        result.dci.tag.name(),
        method.name()
    )
}

fn print_census(result: &CensusResult, p: Option<u64>, method: Method, format: Format) {
    match format {
        Format::Text => println!("{}", census_text(result, method)),
        Format::Json => println!("{}", census_json(result, p, method)),
        Format::Csv => {
            println!("{CSV_HEADER}");
            println!("{}", census_csv_row(result, p, method));
        }
    }
}

/// Prints all rows; per-row errors never abort the batch. Returns the exit
/// code: 1 if any row failed, else 0.
fn print_table(rows: &[TableRow], format: Format) -> i32 {
    let mut any_failed = false;
    match format {
        Format::Json => {
            let values: Vec<serde_json::Value> = rows
                .iter()
                .map(|row| match &row.outcome {
                    Ok(result) => census_json(result, row.p, row.method),
                    Err(err) => {
                        any_failed = true;
                        let mut value = json!({
                            "n": row.n,
                            "method": row.method.name(),
                            "error": err.to_string(),
                        });
                        if let Some(p) = row.p {
                            value["p"] = json!(p);
                        }
                        value
                    }
                })
                .collect();
            println!("{}", serde_json::Value::Array(values));
        }
        Format::Csv => {
            println!("{CSV_HEADER}");
            for row in rows {
                match &row.outcome {
                    Ok(result) => println!("{}", census_csv_row(result, row.p, row.method)),
                    Err(err) => {
                        any_failed = true;
                        eprintln!("n={} method={}: {err}", row.n, row.method.name());
                    }
                }
            }
        }
        Format::Text => {
            for row in rows {
                match &row.outcome {
                    Ok(result) => println!("{}", census_text(result, row.method)),
                    Err(err) => {
                        any_failed = true;
                        eprintln!("n={} method={}: {err}", row.n, row.method.name());
                    }
                }
            }
        }
    }
    if any_failed {
        1
    } else {
        0
    }
}

