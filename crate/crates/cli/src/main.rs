//! `approxsys`: build approximants, emit evaluation grids, compute error
//! bounds, march numerically along paths and run the verification suite.
//!
//! Exit status is 0 on success, 1 when `verify` finds a failing check and
//! 2 for usage and library errors.

mod commands;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use output::Format;

#[derive(Parser, Debug)]
#[command(name = "approxsys", version, about = "Approximation systems: exact approximants, error bounds, numerics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct EntryArgs {
    /// Catalog entry name (see `list`).
    entry: String,
    #[arg(long)]
    p: Option<u32>,
    /// Disk radius R.
    #[arg(long = "R")]
    radius: Option<f64>,
    #[arg(long)]
    alpha: Option<f64>,
    /// Approximation order.
    #[arg(long, default_value_t = 3)]
    n: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Catalog entries and their parameters.
    List {
        #[arg(long, default_value = "json")]
        format: Format,
    },
    /// Exact coefficients of g^[n].
    Approximate {
        #[command(flatten)]
        entry: EntryArgs,
        /// Emit the whole triangle g_0^[n], ..., g_n^[n].
        #[arg(long)]
        all_rows: bool,
        #[arg(long, default_value = "json")]
        format: Format,
    },
    /// g^[n] against the target on a grid.
    Eval {
        #[command(flatten)]
        entry: EntryArgs,
        /// Segment endpoints `a,b` (complex literals such as `1+2i`).
        #[arg(long, conflicts_with = "circle")]
        segment: Option<String>,
        /// Circle `center,radius`.
        #[arg(long)]
        circle: Option<String>,
        #[arg(long, default_value_t = 101)]
        points: usize,
        #[arg(long, default_value = "csv")]
        format: Format,
    },
    /// Error bound report.
    Bound {
        #[command(flatten)]
        entry: EntryArgs,
        /// A | B | uniform | fde | closed-form
        #[arg(long, default_value = "B")]
        variant: commands::Variant,
        #[arg(long, default_value = "json")]
        format: Format,
    },
    /// Euler marching along a path.
    Numeric {
        #[command(flatten)]
        entry: EntryArgs,
        #[arg(long, conflicts_with = "polyline")]
        segment: Option<String>,
        /// Polyline vertices `x0,x1,...`; N steps per segment.
        #[arg(long)]
        polyline: Option<String>,
        #[arg(long = "N", default_value_t = 1000)]
        steps: usize,
        /// Emit every row g_i^[n] instead of row 0 only.
        #[arg(long)]
        all_rows: bool,
        #[arg(long, default_value = "csv")]
        format: Format,
    },
    /// Run the invariant suites.
    Verify {
        /// all | prefix | bounds | shifts | positivity | numeric
        #[arg(default_value = "all")]
        scope: String,
        #[arg(long, default_value = "json")]
        format: Format,
    },
}

fn run(cli: Cli) -> Result<(String, bool), String> {
    let (doc, format, ok) = match cli.command {
        Command::List { format } => (commands::list(), format, true),
        Command::Approximate { entry, all_rows, format } => (commands::approximate(&entry, all_rows)?, format, true),
        Command::Eval { entry, segment, circle, points, format } => {
            (commands::eval(&entry, segment.as_deref(), circle.as_deref(), points)?, format, true)
        }
        Command::Bound { entry, variant, format } => (commands::bound(&entry, variant)?, format, true),
        Command::Numeric { entry, segment, polyline, steps, all_rows, format } => {
            (commands::numeric(&entry, segment.as_deref(), polyline.as_deref(), steps, all_rows)?, format, true)
        }
        Command::Verify { scope, format } => {
            let (doc, passed) = commands::verify(&scope)?;
            (doc, format, passed)
        }
    };
    Ok((doc.render(format)?, ok))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((text, ok)) => {
            print!("{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
