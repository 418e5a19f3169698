//! Command-line front end: construct tournaments, inspect structure, decide
//! spectral monomorphy, classify, run verification suites, and run censuses.
//!
//! Exit codes: 0 = success / affirmative verdict, 1 = well-formed input with
//! a negative mathematical verdict, 2 = usage or input error.

use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use tourspec::census::{run_census_from, CensusCheckpoint, CensusParams, CensusQuestion};
use tourspec::skew::{classify_skew, SkewClassTag};
use tourspec::spectra::{classify_n2, spectral_monomorphy_jobs, N2Class, SpectrumMode};
use tourspec::verify::{run_suite, SuiteConfig, SUITE_NAMES};
use tourspec::{Tournament, VertexSet};

#[derive(Parser)]
#[command(
    name = "tourspec",
    version,
    about = "Exact spectral analysis of tournaments",
    after_help = "Use '-' as FILE to read a tournament from standard input."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a tournament and print its text form
    Gen {
        /// Generator: transitive | paley | circulant | counterexample7 | rn
        #[arg(required_unless_present = "triple")]
        generator: Option<String>,
        /// Generator parameters (order, prime, or symbol list such as 3,5,6)
        params: Vec<String>,
        /// Apply a switch by this vertex set afterwards, e.g. --switch 0,2
        #[arg(long)]
        switch: Option<String>,
        /// Combine three tournament files cyclically (first part dominates
        /// the second, the second the third, the third the first)
        #[arg(long, num_args = 3, value_names = ["F1", "F2", "F3"], conflicts_with = "generator")]
        triple: Option<Vec<String>>,
    },
    /// Print the structural summary of a tournament
    Info {
        file: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Decide k-spectral monomorphy (exit 0 monomorphic, 1 witness found)
    Check {
        file: String,
        #[arg(long)]
        k: usize,
        /// Use the skew-adjacency matrix instead of the adjacency matrix
        #[arg(long)]
        skew: bool,
        /// Worker threads (verdicts are identical for any job count)
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Classify by the structure theorems (pair-deleted spectra, or the
    /// skew classes with --skew)
    Classify {
        file: String,
        #[arg(long)]
        skew: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a named verification suite (exit 0 iff all checks pass)
    Verify {
        /// One of: eq1 schwenk corollary1 prop2 aat lemma1 lemma2 gregory
        /// prop11 theorem1 theorem2 rn main3
        suite: String,
        /// Size override (theorem2: 21 or 63)
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Worker threads for the heavy spectral checks (0 = default pool)
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Exhaustively enumerate labeled tournaments and classify them
    /// (exit 0 iff no unexplained exceptions are found)
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Use skew-adjacency spectra
        #[arg(long)]
        skew: bool,
        /// Question: theorem1 | prop3 | prop8 | problem1
        #[arg(long)]
        question: String,
        /// Worker threads (0 = default pool); reports are identical for
        /// any job count
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Checkpoint file: written after each chunk, resumed from if present
        #[arg(long)]
        resume: Option<PathBuf>,
        /// Sampling mode (order 8 only): number of seeded samples
        #[arg(long)]
        samples: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => std::process::exit(code),
        Err(message) => {
            eprintln!("error: {message}");
            std::process::exit(2);
        }
    }
}

fn run(cmd: Command) -> Result<i32, String> {
    match cmd {
        Command::Gen {
            generator,
            params,
            switch,
            triple,
        } => cmd_gen(generator, params, switch, triple),
        Command::Info { file, format } => cmd_info(&file, format),
        Command::Check {
            file,
            k,
            skew,
            jobs,
            format,
        } => cmd_check(&file, k, skew, jobs, format),
        Command::Classify { file, skew, format } => cmd_classify(&file, skew, format),
        Command::Verify {
            suite,
            n,
            trials,
            seed,
            jobs,
            format,
        } => cmd_verify(&suite, n, trials, seed, jobs, format),
        Command::Census {
            n,
            k,
            skew,
            question,
            jobs,
            resume,
            samples,
            seed,
            format,
        } => cmd_census(n, k, skew, &question, jobs, resume, samples, seed, format),
    }
}

fn read_tournament(file: &str) -> Result<Tournament, String> {
    let text = if file == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("reading standard input: {e}"))?;
        buf
    } else {
        std::fs::read_to_string(file).map_err(|e| format!("reading {file}: {e}"))?
    };
    Tournament::parse(&text).map_err(|e| format!("{file}: {e}"))
}

fn parse_usize(text: &str, what: &str) -> Result<usize, String> {
    text.parse()
        .map_err(|_| format!("{what}: not a number: {text:?}"))
}

fn cmd_gen(
    generator: Option<String>,
    params: Vec<String>,
    switch: Option<String>,
    triple: Option<Vec<String>>,
) -> Result<i32, String> {
    let mut t = if let Some(files) = triple {
        let parts: Vec<Tournament> = files
            .iter()
            .map(|f| read_tournament(f))
            .collect::<Result<_, _>>()?;
        Tournament::triple(&parts[0], &parts[1], &parts[2]).map_err(|e| e.to_string())?
    } else {
        let name = generator.expect("clap enforces generator or --triple");
        let arg = |i: usize| -> Result<&str, String> {
            params
                .get(i)
                .map(|s| s.as_str())
                .ok_or_else(|| format!("generator {name} needs a parameter"))
        };
        match name.as_str() {
            "transitive" => {
                Tournament::transitive(parse_usize(arg(0)?, "order")?).map_err(|e| e.to_string())?
            }
            "paley" => {
                let raw = arg(0)?;
                let p: u64 = raw
                    .parse()
                    .map_err(|_| format!("prime: not a number: {raw:?}"))?;
                Tournament::paley(p).map_err(|e| e.to_string())?
            }
            "circulant" => {
                let n = parse_usize(arg(0)?, "order")?;
                let symbols = VertexSet::parse(arg(1)?).map_err(|e| e.to_string())?;
                Tournament::circulant(n, symbols).map_err(|e| e.to_string())?
            }
            "counterexample7" => Tournament::counterexample7(),
            "rn" => Tournament::reversed_transitive(parse_usize(arg(0)?, "order")?)
                .map_err(|e| e.to_string())?,
            other => return Err(format!("unknown generator {other:?}")),
        }
    };
    if let Some(set) = switch {
        let x = VertexSet::parse(&set).map_err(|e| e.to_string())?;
        t = t.switch(x).map_err(|e| e.to_string())?;
    }
    print!("{}", t.to_text());
    Ok(0)
}

fn cmd_info(file: &str, format: Format) -> Result<i32, String> {
    let t = read_tournament(file)?;
    let report = t.structure_report();
    match format {
        Format::Json => {
            let mut doc = serde_json::to_value(&report).expect("report serializes");
            doc["n"] = serde_json::json!(t.n());
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        Format::Text => {
            let yes_no = |b: bool| if b { "yes" } else { "no" };
            println!("vertices:        {}", t.n());
            println!(
                "out-degrees:     {}",
                report
                    .out_degrees
                    .iter()
                    .map(|d| d.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            println!("transitive:      {}", yes_no(report.is_transitive));
            println!("regular:         {}", yes_no(report.is_regular));
            println!("near-regular:    {}", yes_no(report.is_near_regular));
            match report.t {
                Some(t) => println!("doubly regular:  yes (t={t})"),
                None => println!("doubly regular:  no"),
            }
            println!("homogeneous:     {}", yes_no(report.is_homogeneous));
            println!("3-cycles:        {}", report.three_cycle_count);
        }
    }
    Ok(0)
}

fn cmd_check(file: &str, k: usize, skew: bool, jobs: usize, format: Format) -> Result<i32, String> {
    let t = read_tournament(file)?;
    let mode = if skew {
        SpectrumMode::Skew
    } else {
        SpectrumMode::Adjacency
    };
    let verdict = spectral_monomorphy_jobs(&t, k, mode, jobs).map_err(|e| e.to_string())?;
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&verdict.to_json()).unwrap()
        ),
        Format::Text => {
            println!("mode:    {}", mode.as_str());
            println!("k:       {k}");
            if let Some(common) = verdict.common() {
                println!("verdict: monomorphic");
                println!("common:  {common}");
                println!("coeffs:  {}", common.machine_string());
            } else {
                let w = verdict.witness().expect("non-monomorphic has a witness");
                println!("verdict: not monomorphic");
                println!("first:   {}", w.first);
                println!("  poly:  {}  {}", w.first_poly, w.first_poly.machine_string());
                println!("second:  {}", w.second);
                println!(
                    "  poly:  {}  {}",
                    w.second_poly,
                    w.second_poly.machine_string()
                );
            }
        }
    }
    Ok(if verdict.is_monomorphic() { 0 } else { 1 })
}

fn cmd_classify(file: &str, skew: bool, format: Format) -> Result<i32, String> {
    let t = read_tournament(file)?;
    if skew {
        let class = classify_skew(&t).map_err(|e| e.to_string())?;
        match format {
            Format::Json => {
                let doc = serde_json::json!({
                    "mode": "skew",
                    "class": class.tag.as_str(),
                    "certificate": class.certificate.map(|c| c.to_indices()),
                });
                println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            }
            Format::Text => {
                println!("mode:        skew");
                println!("class:       {}", class.tag.as_str());
                if let Some(cert) = class.certificate {
                    println!("certificate: {cert}");
                }
            }
        }
        Ok(if class.tag == SkewClassTag::Other { 1 } else { 0 })
    } else {
        let class = classify_n2(&t).map_err(|e| e.to_string())?;
        match format {
            Format::Json => {
                let doc = serde_json::json!({
                    "mode": "adjacency",
                    "k": t.n() - 2,
                    "class": class.as_str(),
                });
                println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            }
            Format::Text => {
                println!("mode:   adjacency (pair-deleted spectra, k = n-2)");
                println!("class:  {}", class.as_str());
            }
        }
        Ok(if class == N2Class::NotMonomorphic { 1 } else { 0 })
    }
}

fn cmd_verify(
    suite: &str,
    n: Option<usize>,
    trials: usize,
    seed: u64,
    jobs: usize,
    format: Format,
) -> Result<i32, String> {
    if !SUITE_NAMES.contains(&suite) {
        return Err(format!(
            "unknown suite {suite:?}; expected one of {}",
            SUITE_NAMES.join(" ")
        ));
    }
    if suite == "theorem2" && n == Some(63) {
        eprintln!(
            "warning: order 63 computes 63 characteristic polynomials of \
             62x62 big-integer matrices; expect a noticeably longer run"
        );
    }
    let cfg = SuiteConfig {
        n,
        trials,
        seed,
        jobs,
    };
    let report = run_suite(suite, &cfg).map_err(|e| e.to_string())?;
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&report.to_json()).unwrap()
        ),
        Format::Text => print!("{}", report.summary()),
    }
    Ok(if report.passed() { 0 } else { 1 })
}

#[allow(clippy::too_many_arguments)]
fn cmd_census(
    n: usize,
    k: usize,
    skew: bool,
    question: &str,
    jobs: usize,
    resume: Option<PathBuf>,
    samples: Option<u64>,
    seed: u64,
    format: Format,
) -> Result<i32, String> {
    let params = CensusParams {
        n,
        k,
        mode: if skew {
            SpectrumMode::Skew
        } else {
            SpectrumMode::Adjacency
        },
        question: CensusQuestion::parse(question).map_err(|e| e.to_string())?,
        jobs,
        samples,
        seed,
    };

    let checkpoint: Option<CensusCheckpoint> = match &resume {
        Some(path) if path.exists() => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("reading checkpoint {}: {e}", path.display()))?;
            Some(
                serde_json::from_str(&text)
                    .map_err(|e| format!("parsing checkpoint {}: {e}", path.display()))?,
            )
        }
        _ => None,
    };

    let checkpoint_path = resume.clone();
    let mut sink = move |cp: &CensusCheckpoint| {
        if let Some(path) = &checkpoint_path {
            let tmp = path.with_extension("tmp");
            if std::fs::write(&tmp, serde_json::to_string(cp).expect("checkpoint serializes"))
                .and_then(|_| std::fs::rename(&tmp, path))
                .is_err()
            {
                eprintln!("warning: could not write checkpoint {}", path.display());
            }
        }
    };

    let report = run_census_from(&params, checkpoint, &mut sink).map_err(|e| e.to_string())?;
    if let Some(path) = &resume {
        let _ = std::fs::remove_file(path);
    }

    match format {
        Format::Json => println!("{}", report.to_json_string()),
        Format::Text => print!("{}", report.summary()),
    }
    Ok(if report.exceptions.is_empty() { 0 } else { 1 })
}
