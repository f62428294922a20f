//! Command-line front end.
//!
//! Reads a statement file describing the field, ring, order and ideal(s),
//! runs one of the pipelines and writes a deterministic report (text to
//! stdout, JSON/text to files on request).
//!
//! Exit codes: 0 success, 2 parse error, 3 precondition error,
//! 4 theorem-violation/internal-consistency, 5 specialization failure.

use clap::Parser;
use liftings::job::{self, Command as JobCommand, JobOptions};

#[derive(Parser)]
#[command(
    name = "liftings",
    about = "Exact computations with schemes of liftings of homogeneous ideals"
)]
struct Cli {
    /// Input statement file (field/ring/order/weights/ideal)
    #[arg(long)]
    input: std::path::PathBuf,

    /// One of: gb, lift_scheme, stratum, isom, acm_lift, verify_lifting,
    /// saturate, truncate, intersect, discriminant
    #[arg(long)]
    command: String,

    /// Term order on the geometric variables (lex | deglex | degrevlex);
    /// overrides the input file's `order` statement
    #[arg(long)]
    order: Option<String>,

    /// Second term order (isom)
    #[arg(long)]
    order2: Option<String>,

    /// Values of t to try, comma separated (acm_lift)
    #[arg(long, value_name = "LIST")]
    t_values: Option<String>,

    /// Distraction scalars per variable, e.g. "x0:0,-1;x1:0,-1,1" (acm_lift)
    #[arg(long)]
    scalars: Option<String>,

    /// Truncation degree (truncate)
    #[arg(long)]
    m: Option<i64>,

    /// Variable for discriminants
    #[arg(long)]
    var: Option<String>,

    /// Seed for the deterministic sampling helpers
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Worker threads for the independent S-pair reductions
    #[arg(long, default_value_t = 1)]
    threads: usize,

    /// Write the JSON report here
    #[arg(long)]
    json: Option<std::path::PathBuf>,

    /// Write the text report here (it is always printed to stdout)
    #[arg(long)]
    text: Option<std::path::PathBuf>,
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(match real_main(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    });
}

fn real_main(cli: Cli) -> liftings::Result<()> {
    let command = JobCommand::parse(&cli.command)?;
    let input = std::fs::read_to_string(&cli.input)
        .map_err(|e| liftings::Error::Argument(format!("cannot read input: {e}")))?;
    let mut options = JobOptions {
        order2: cli.order2,
        scalars: cli.scalars,
        seed: cli.seed,
        threads: cli.threads.max(1),
        truncate_degree: cli.m,
        variable: cli.var,
        ..JobOptions::default()
    };
    if let Some(ts) = &cli.t_values {
        options.t_values = ts
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| liftings::Error::Argument(format!("bad t value `{t}`")))
            })
            .collect::<liftings::Result<Vec<_>>>()?;
    }
    if options.threads > 1 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(options.threads)
            .build_global()
            .ok();
    }
    let mut job = job::parse_job(&input, command, options)?;
    if let Some(name) = &cli.order {
        job.order = job::parse_order_name(name)?;
        job.order_label = name.clone();
    }
    let report = job::run(&job)?;
    let text = report.to_text();
    print!("{text}");
    if let Some(path) = &cli.text {
        std::fs::write(path, &text)
            .map_err(|e| liftings::Error::Argument(format!("cannot write text report: {e}")))?;
    }
    if let Some(path) = &cli.json {
        std::fs::write(path, report.to_json())
            .map_err(|e| liftings::Error::Argument(format!("cannot write JSON report: {e}")))?;
    }
    Ok(())
}
