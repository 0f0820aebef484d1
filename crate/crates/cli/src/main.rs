//! `fanocone`: classify double blow-ups of P^(n-k) x P^k, synthesize
//! boundary divisors, check candidate boundaries and query cone positions.
//!
//! Exit codes: 0 for an affirmative result, 1 for a negative or unknown
//! result, 2 for usage errors. All rational I/O is exact `p/q` text.

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use fanocone_core::{
    ample_rows, delta_class, delta_to_greek, effective_membership, find_boundary, klt_check,
    positivity, render, sweep, DeltaCoeffs, DivClass, Geometry, LogFanoVerdict, OutputFormat, Rat,
};

#[derive(Parser)]
#[command(
    name = "fanocone",
    version,
    about = "Fano / weak Fano / log Fano classification of double blow-ups of products of two projective spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify every valid (n, k, d) with n <= n-max and d <= d-max.
    Classify {
        /// Largest n to sweep (n >= 3).
        #[arg(long)]
        n_max: i64,
        /// Largest hypersurface degree to sweep (d >= 1).
        #[arg(long)]
        d_max: i64,
        /// Output format: table, csv or json.
        #[arg(long, default_value = "table")]
        format: String,
    },
    /// Search for boundary coefficients making the pair log Fano.
    Witness { n: i64, k: i64, d: i64 },
    /// Check one candidate boundary x*H0 + y*L0 + z*E + w*F + u*D.
    CheckDelta {
        n: i64,
        k: i64,
        d: i64,
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
        #[arg(allow_hyphen_values = true)]
        z: String,
        #[arg(allow_hyphen_values = true)]
        w: String,
        #[arg(allow_hyphen_values = true)]
        u: String,
    },
    /// Report nef/ample/effective/big status of a divisor class.
    Cone {
        n: i64,
        k: i64,
        d: i64,
        /// Coordinates in the (H, L, E, F) basis.
        #[arg(long, num_args = 4, required = true, allow_hyphen_values = true, value_names = ["H", "L", "E", "F"])]
        class: Vec<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Classify {
            n_max,
            d_max,
            format,
        } => cmd_classify(n_max, d_max, &format),
        Command::Witness { n, k, d } => cmd_witness(n, k, d),
        Command::CheckDelta {
            n,
            k,
            d,
            x,
            y,
            z,
            w,
            u,
        } => cmd_check_delta(n, k, d, [&x, &y, &z, &w, &u]),
        Command::Cone { n, k, d, class } => cmd_cone(n, k, d, &class),
    }
}

fn usage_error(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn parse_geometry(n: i64, k: i64, d: i64) -> Result<Geometry, ExitCode> {
    Geometry::new(n, k, d).map_err(usage_error)
}

fn parse_rat(text: &str) -> Result<Rat, ExitCode> {
    text.parse::<Rat>().map_err(usage_error)
}

/// Sweep parallelism cap: a positive integer in FANOCONE_THREADS.
fn sweep_pool() -> Result<Option<rayon::ThreadPool>, ExitCode> {
    let value = match std::env::var("FANOCONE_THREADS") {
        Err(std::env::VarError::NotPresent) => return Ok(None),
        Err(std::env::VarError::NotUnicode(_)) => {
            return Err(usage_error("FANOCONE_THREADS must be a positive integer"));
        }
        Ok(value) => value,
    };
    let threads: usize = value.parse().ok().filter(|&t| t > 0).ok_or_else(|| {
        usage_error(format!(
            "FANOCONE_THREADS must be a positive integer (got `{value}`)"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map(Some)
        .map_err(usage_error)
}

fn cmd_classify(n_max: i64, d_max: i64, format: &str) -> ExitCode {
    if n_max < 3 {
        return usage_error(format!("n-max must be ≥ 3 (got {n_max})"));
    }
    if d_max < 1 {
        return usage_error(format!("d-max must be ≥ 1 (got {d_max})"));
    }
    let format: OutputFormat = match format.parse() {
        Ok(f) => f,
        Err(e) => return usage_error(e),
    };
    let pool = match sweep_pool() {
        Ok(pool) => pool,
        Err(code) => return code,
    };
    let rows = match pool {
        Some(pool) => pool.install(|| sweep(n_max, d_max)),
        None => sweep(n_max, d_max),
    };
    match rows {
        Ok(rows) => {
            print!("{}", render(&rows, format));
            ExitCode::SUCCESS
        }
        Err(e) => usage_error(e),
    }
}

fn cmd_witness(n: i64, k: i64, d: i64) -> ExitCode {
    let g = match parse_geometry(n, k, d) {
        Ok(g) => g,
        Err(code) => return code,
    };
    match find_boundary(&g) {
        LogFanoVerdict::Yes { witness, .. } => {
            println!("log Fano pair for (n, k, d) = ({n}, {k}, {d})");
            println!("x = {}", witness.x);
            println!("y = {}", witness.y);
            println!("z = {}", witness.z);
            println!("w = {}", witness.w);
            println!("u = {}", witness.u);
            let (alpha, beta, gamma, delta) = delta_to_greek(&witness, &g);
            println!("greek (alpha, beta, gamma, delta) = ({alpha}, {beta}, {gamma}, {delta})");
            ExitCode::SUCCESS
        }
        LogFanoVerdict::Unknown => {
            println!("unknown (no boundary of the 5-generator form)");
            ExitCode::from(1)
        }
    }
}

fn cmd_check_delta(n: i64, k: i64, d: i64, raw: [&String; 5]) -> ExitCode {
    let g = match parse_geometry(n, k, d) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let mut values = Vec::with_capacity(5);
    for text in raw {
        match parse_rat(text) {
            Ok(v) => values.push(v),
            Err(code) => return code,
        }
    }
    let [x, y, z, w, u]: [Rat; 5] = values.try_into().expect("five coefficients");
    let coeffs = DeltaCoeffs::new(x, y, z, w, u);

    let klt = klt_check(&coeffs);
    println!(
        "klt: {}",
        if klt {
            "ok (all coefficients in [0, 1))"
        } else {
            "fail (a coefficient lies outside [0, 1))"
        }
    );

    let rows = ample_rows(&delta_class(&coeffs, &g), &g);
    let labels = ["z - u", "y - d*x + d*z", "x - y - z + w", "y - w + u"];
    println!("ampleness rows (lhs < rhs):");
    let mut ample = true;
    for (label, (lhs, rhs)) in labels.iter().zip(&rows) {
        let ok = lhs < rhs;
        ample &= ok;
        println!(
            "  {label:<14}: {lhs} < {rhs} : {}",
            if ok { "ok" } else { "fail" }
        );
    }

    let verdict = klt && ample;
    println!("log Fano pair: {}", if verdict { "yes" } else { "no" });
    if verdict {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_cone(n: i64, k: i64, d: i64, raw: &[String]) -> ExitCode {
    let g = match parse_geometry(n, k, d) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let mut coords = Vec::with_capacity(4);
    for text in raw {
        match parse_rat(text) {
            Ok(v) => coords.push(v),
            Err(code) => return code,
        }
    }
    let [h, l, e, f]: [Rat; 4] = coords.try_into().expect("four coordinates");
    let class = DivClass::new(h, l, e, f);

    let report = positivity::report(&class, &g);
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    println!("class (H, L, E, F): {class}");
    let [c1, c2, c3, c4] = &report.nef_coords;
    println!("nef coordinates: ({c1}, {c2}, {c3}, {c4})");
    println!("nef: {}", yes_no(report.nef));
    println!("ample: {}", yes_no(report.ample));
    match effective_membership(&class, &g) {
        Some([a1, a2, a3, a4, a5]) => {
            println!("effective: yes");
            println!("certificate (H0, L0, E, F, D): ({a1}, {a2}, {a3}, {a4}, {a5})");
        }
        None => println!("effective: no (not effective)"),
    }
    println!("big: {}", yes_no(report.big));
    ExitCode::SUCCESS
}
