use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use lexibalance::align::LexicalCategorySet;
use lexibalance::ingest::{CorpusSource, SplitMode};
use lexibalance::report::{
    analyze_corpus, batch, canonical_category_vector, render, AnalysisOptions, CorpusOutcome,
    CorpusReport, RunConfig,
};

#[derive(Parser)]
#[command(name = "lexibalance", version, about = "Sentence alignment and normality reports for text corpora")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a single text file.
    Analyze {
        file: PathBuf,
        /// Treat each non-empty line as one sentence.
        #[arg(long)]
        pre_split: bool,
        #[arg(long, default_value_t = lexibalance::report::DEFAULT_BINS)]
        bins: usize,
        #[arg(long, default_value_t = lexibalance::stats::DEFAULT_ALPHA)]
        alpha: f64,
        /// Include principal axes in the JSON report.
        #[arg(long)]
        verbose_pca: bool,
        #[arg(long, default_value = "lexibalance-out")]
        out: PathBuf,
    },
    /// Analyze every corpus listed in a JSON config file.
    Batch {
        config: PathBuf,
        /// Also analyze all corpora concatenated.
        #[arg(long)]
        combined: bool,
        /// Overrides the config's output directory.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the lexical categories and their category vector.
    Categories,
}

fn print_report(report: &CorpusReport) {
    println!(
        "{}",
        render::text_histogram(&report.dot_histogram, &format!("Dot products: {}", report.corpus_id))
    );
    println!(
        "{}",
        render::text_histogram(
            &report.length_histogram,
            &format!("Sentence lengths: {}", report.corpus_id)
        )
    );
}

fn analyze(
    file: &Path,
    mode: SplitMode,
    options: AnalysisOptions,
    out: &Path,
) -> Result<()> {
    let label = file
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "corpus".to_string());
    let cfg = RunConfig {
        bins: options.bins,
        alpha: options.alpha,
        ..RunConfig::default()
    };
    cfg.validate()?;
    let outcome = analyze_corpus(&CorpusSource::file(file), &label, mode, &options)?;
    let report = match outcome {
        CorpusOutcome::Analyzed(r) => r,
        CorpusOutcome::Skipped { corpus_id, reason } => {
            bail!("{corpus_id}: no report produced ({reason})")
        }
    };
    print_report(&report);
    println!("{}", render::summary_table([report.as_ref()]));
    render::write_report(&report, out)?;
    let summary = out.join("summary.csv");
    fs::write(&summary, render::summary_csv([report.as_ref()])?)
        .with_context(|| format!("writing {}", summary.display()))?;
    println!("wrote reports to {}", out.display());
    Ok(())
}

fn run_batch(config: &Path, combined: bool, out: Option<PathBuf>) -> Result<()> {
    let mut cfg = RunConfig::load(config)?;
    cfg.combined |= combined;
    if let Some(out) = out {
        cfg.out_dir = out;
    }
    cfg.validate()?;
    let result = batch(&cfg)?;
    render::write_batch(&result, &cfg.out_dir)?;
    println!("{}", render::summary_table(result.reports()));
    for (id, reason) in result.skipped() {
        println!("skipped {id}: {reason}");
    }
    println!("wrote reports to {}", cfg.out_dir.display());
    Ok(())
}

fn categories() -> Result<()> {
    let set = LexicalCategorySet::canonical();
    let ascii = set.ascii_matrix()?;
    let k = canonical_category_vector()?;
    for ((name, codes), value) in set.display_names().iter().zip(ascii.iter_rows()).zip(&k.values) {
        let codes: Vec<String> = codes.iter().map(u8::to_string).collect();
        println!("{name:<22} {value:>12.6}  [{}]", codes.join(", "));
    }
    println!("explained variance (k=1): {:.6}", k.cumulative_explained_variance);
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze {
            file,
            pre_split,
            bins,
            alpha,
            verbose_pca,
            out,
        } => {
            let mode = if pre_split { SplitMode::PreSplit } else { SplitMode::Split };
            let options = AnalysisOptions { bins, alpha, verbose_pca };
            analyze(&file, mode, options, &out)
        }
        Command::Batch { config, combined, out } => run_batch(&config, combined, out),
        Command::Categories => categories(),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
