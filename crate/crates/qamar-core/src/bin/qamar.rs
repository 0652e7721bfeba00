//! Batch command-line front end: tag or lemmatize text files and score
//! predictions against gold annotations.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};

use qamar_core::{
    evaluate_records, parse_gold, parse_predictions, Analyzer, AnalyzerOptions, EvalOptions,
    LexiconBundle, OutputRecord,
};

/// Rule-based Arabic lemmatizer and POS tagger.
#[derive(Parser)]
#[command(name = "qamar", version, about)]
struct Cli {
    #[command(flatten)]
    lexicon: LexiconArgs,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct LexiconArgs {
    /// Lexicon directory (default: the compiled-in seed; the
    /// QAMAR_LEXICON_DIR environment variable is used when set).
    #[arg(long, global = true, value_name = "DIR")]
    lexicon_dir: Option<PathBuf>,

    /// Fold hamzated alef variants to bare alef during normalization.
    #[arg(long, global = true)]
    fold_alef: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Tag a UTF-8 text file; one TSV row per token on standard output.
    Tag { file: PathBuf },
    /// Print surface and lemma pairs for a UTF-8 text file.
    Lemmatize { file: PathBuf },
    /// Score a prediction TSV (output of `tag`) against a gold TSV.
    Eval {
        predictions: PathBuf,
        gold: PathBuf,
        /// Emit the report as JSON.
        #[arg(long)]
        json: bool,
        /// Score adjectives as nouns.
        #[arg(long)]
        collapse_adjectives: bool,
        /// Include number and punctuation tokens in the accuracy.
        #[arg(long)]
        include_non_words: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(message) => {
            eprintln!("qamar: {message}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<(), String> {
    let bundle = load_lexicon(&cli.lexicon)?;
    let mut options = AnalyzerOptions::default();
    options.normalize.fold_alef = cli.lexicon.fold_alef;
    let analyzer = Analyzer::new(bundle, options);

    match cli.command {
        Command::Tag { file } => {
            let text = read_input(&file)?;
            let analyses = analyzer.analyze(&text);
            let mut out = String::new();
            for analysis in &analyses {
                let record = OutputRecord::from_analysis(analysis, analyzer.bundle());
                out.push_str(&record.tsv_line());
                out.push('\n');
            }
            write_stdout(&out)
        }
        Command::Lemmatize { file } => {
            let text = read_input(&file)?;
            let analyses = analyzer.analyze(&text);
            let mut out = String::new();
            for analysis in &analyses {
                out.push_str(&analysis.token.surface);
                out.push('\t');
                out.push_str(&analysis.lemma);
                out.push('\n');
            }
            write_stdout(&out)
        }
        Command::Eval {
            predictions,
            gold,
            json,
            collapse_adjectives,
            include_non_words,
        } => {
            let pred_text = read_input(&predictions)?;
            let gold_text = read_input(&gold)?;
            let preds = parse_predictions(&predictions.display().to_string(), &pred_text)
                .map_err(|e| e.to_string())?;
            let gold =
                parse_gold(&gold.display().to_string(), &gold_text).map_err(|e| e.to_string())?;
            let options = EvalOptions {
                collapse_adjectives,
                include_non_words,
            };
            let report = evaluate_records(&preds, &gold, &options).map_err(|e| e.to_string())?;
            let rendered = if json {
                serde_json::to_string_pretty(&report).expect("report serializes")
            } else {
                report.to_text()
            };
            write_stdout(&rendered)
        }
    }
}

fn load_lexicon(args: &LexiconArgs) -> Result<Arc<LexiconBundle>, String> {
    let dir = args
        .lexicon_dir
        .clone()
        .or_else(|| std::env::var_os("QAMAR_LEXICON_DIR").map(PathBuf::from));
    match dir {
        Some(dir) => qamar_core::load_bundle(&dir)
            .map(Arc::new)
            .map_err(|e| e.to_string()),
        None => Ok(Arc::new(LexiconBundle::bundled())),
    }
}

fn read_input(path: &PathBuf) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn write_stdout(content: &str) -> Result<(), String> {
    let mut stdout = std::io::stdout().lock();
    stdout
        .write_all(content.as_bytes())
        .and_then(|_| {
            if content.ends_with('\n') || content.is_empty() {
                Ok(())
            } else {
                stdout.write_all(b"\n")
            }
        })
        .map_err(|e| e.to_string())
}
