//! Evaluation harness: accuracy against gold annotations, per-category
//! breakdowns, confusion matrix, and tag-distribution statistics.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::EvalError;
use crate::tagger::Analysis;
use crate::text::TokenKind;

/// One gold annotation: surface, category name, optional lemma.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldRecord {
    pub surface: String,
    pub category: String,
    pub lemma: Option<String>,
}

const CATEGORY_NAMES: [&str; 8] = [
    "Noun",
    "ProperNoun",
    "Adjective",
    "Verb",
    "Particle",
    "Number",
    "Punct",
    "Unknown",
];

/// Parse a gold TSV: `surface<TAB>category<TAB>lemma?`, `#` comments.
pub fn parse_gold(file: &str, text: &str) -> Result<Vec<GoldRecord>, EvalError> {
    let mut records = Vec::new();
    for (line_no, raw) in text.lines().enumerate() {
        let line = raw.trim_end_matches('\r');
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        let (surface, category, lemma) = match fields.as_slice() {
            [surface, category] => (*surface, *category, None),
            [surface, category, lemma] => {
                let lemma = if *lemma == "-" {
                    None
                } else {
                    Some(lemma.to_string())
                };
                (*surface, *category, lemma)
            }
            _ => {
                return Err(EvalError::Parse {
                    file: file.to_string(),
                    line: line_no + 1,
                    message: "expected 2 or 3 tab-separated fields".to_string(),
                })
            }
        };
        if !CATEGORY_NAMES.contains(&category) {
            return Err(EvalError::Parse {
                file: file.to_string(),
                line: line_no + 1,
                message: format!("unknown category `{category}`"),
            });
        }
        records.push(GoldRecord {
            surface: surface.to_string(),
            category: category.to_string(),
            lemma,
        });
    }
    Ok(records)
}

/// A prediction row as parsed back from tagger output: surface,
/// category name, lemma, and whether the token is a word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredRecord {
    pub surface: String,
    pub category: String,
    pub lemma: String,
    pub is_word: bool,
}

impl PredRecord {
    fn from_analysis(analysis: &Analysis) -> Self {
        PredRecord {
            surface: analysis.token.surface.clone(),
            category: analysis.category.name().to_string(),
            lemma: analysis.lemma.clone(),
            is_word: analysis.token.kind == TokenKind::Word,
        }
    }
}

/// Parse prediction rows from `tag` output (TSV, first four columns:
/// surface, tag, category, lemma).
pub fn parse_predictions(file: &str, text: &str) -> Result<Vec<PredRecord>, EvalError> {
    let mut records = Vec::new();
    for (line_no, raw) in text.lines().enumerate() {
        let line = raw.trim_end_matches('\r');
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() < 4 {
            return Err(EvalError::Parse {
                file: file.to_string(),
                line: line_no + 1,
                message: "expected at least 4 tab-separated fields".to_string(),
            });
        }
        let category = fields[2].to_string();
        if !CATEGORY_NAMES.contains(&category.as_str()) {
            return Err(EvalError::Parse {
                file: file.to_string(),
                line: line_no + 1,
                message: format!("unknown category `{category}`"),
            });
        }
        let is_word = !matches!(category.as_str(), "Number" | "Punct");
        records.push(PredRecord {
            surface: fields[0].to_string(),
            category,
            lemma: fields[3].to_string(),
            is_word,
        });
    }
    Ok(records)
}

/// Evaluation settings.
#[derive(Debug, Clone, Copy, Default)]
pub struct EvalOptions {
    /// Score Adjective as Noun on both sides, for comparison with taggers
    /// lacking the distinction.
    pub collapse_adjectives: bool,
    /// Include number and punctuation tokens in POS accuracy.
    pub include_non_words: bool,
}

/// Scores for one evaluation run.
#[derive(Debug, Clone, Serialize)]
pub struct EvalReport {
    pub token_count: usize,
    pub scored_tokens: usize,
    pub pos_accuracy: f64,
    pub lemma_accuracy: Option<f64>,
    pub per_category: BTreeMap<String, f64>,
    pub confusion: BTreeMap<String, BTreeMap<String, usize>>,
    pub distribution: BTreeMap<String, f64>,
}

impl EvalReport {
    /// Human-readable rendering.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("tokens\t{}\n", self.token_count));
        out.push_str(&format!("scored\t{}\n", self.scored_tokens));
        out.push_str(&format!("pos_accuracy\t{:.4}\n", self.pos_accuracy));
        if let Some(lemma) = self.lemma_accuracy {
            out.push_str(&format!("lemma_accuracy\t{lemma:.4}\n"));
        }
        out.push_str("\nper-category match ratio:\n");
        for (category, ratio) in &self.per_category {
            out.push_str(&format!("  {category}\t{ratio:.4}\n"));
        }
        out.push_str("\ngold distribution (% of scored tokens):\n");
        for (category, share) in &self.distribution {
            out.push_str(&format!("  {category}\t{share:.1}%\n"));
        }
        out.push_str("\nconfusion (gold -> predicted):\n");
        for (gold, row) in &self.confusion {
            for (predicted, count) in row {
                if *count > 0 {
                    out.push_str(&format!("  {gold}\t{predicted}\t{count}\n"));
                }
            }
        }
        out
    }
}

fn scored_gold_name(name: &str, options: &EvalOptions) -> String {
    if options.collapse_adjectives && name == "Adjective" {
        "Noun".to_string()
    } else {
        name.to_string()
    }
}

/// Score analyses against gold annotations aligned by position.
pub fn evaluate(
    predictions: &[Analysis],
    gold: &[GoldRecord],
    options: &EvalOptions,
) -> Result<EvalReport, EvalError> {
    let records: Vec<PredRecord> = predictions.iter().map(PredRecord::from_analysis).collect();
    evaluate_records(&records, gold, options)
}

/// Score prediction records against gold annotations aligned by
/// position.
pub fn evaluate_records(
    predictions: &[PredRecord],
    gold: &[GoldRecord],
    options: &EvalOptions,
) -> Result<EvalReport, EvalError> {
    if predictions.len() != gold.len() {
        return Err(EvalError::LengthMismatch {
            predictions: predictions.len(),
            gold: gold.len(),
        });
    }
    for (position, (prediction, record)) in predictions.iter().zip(gold).enumerate() {
        if prediction.surface != record.surface {
            return Err(EvalError::SurfaceMismatch {
                position,
                prediction: prediction.surface.clone(),
                gold: record.surface.clone(),
            });
        }
    }

    let mut scored = 0usize;
    let mut pos_matches = 0usize;
    let mut lemma_total = 0usize;
    let mut lemma_matches = 0usize;
    let mut confusion: BTreeMap<String, BTreeMap<String, usize>> = BTreeMap::new();
    let mut gold_counts: BTreeMap<String, usize> = BTreeMap::new();
    let mut match_counts: BTreeMap<String, usize> = BTreeMap::new();

    for (prediction, record) in predictions.iter().zip(gold) {
        if !prediction.is_word && !options.include_non_words {
            continue;
        }
        scored += 1;
        let predicted = scored_gold_name(&prediction.category, options);
        let expected = scored_gold_name(&record.category, options);
        *confusion
            .entry(expected.clone())
            .or_default()
            .entry(predicted.clone())
            .or_default() += 1;
        *gold_counts.entry(expected.clone()).or_default() += 1;
        if predicted == expected {
            pos_matches += 1;
            *match_counts.entry(expected.clone()).or_default() += 1;
        }
        if let Some(gold_lemma) = &record.lemma {
            lemma_total += 1;
            if &prediction.lemma == gold_lemma {
                lemma_matches += 1;
            }
        }
    }

    let token_count = predictions.len();
    let pos_accuracy = if scored == 0 {
        0.0
    } else {
        pos_matches as f64 / scored as f64
    };
    let lemma_accuracy = if lemma_total == 0 {
        None
    } else {
        Some(lemma_matches as f64 / lemma_total as f64)
    };
    let per_category = gold_counts
        .iter()
        .map(|(category, &total)| {
            let matched = match_counts.get(category).copied().unwrap_or(0);
            (category.clone(), matched as f64 / total as f64)
        })
        .collect();
    let distribution = gold_counts
        .iter()
        .map(|(category, &total)| (category.clone(), 100.0 * total as f64 / scored as f64))
        .collect();

    Ok(EvalReport {
        token_count,
        scored_tokens: scored,
        pos_accuracy,
        lemma_accuracy,
        per_category,
        confusion,
        distribution,
    })
}

/// Category distribution over word tokens, as percentages.
pub fn tag_distribution(analyses: &[Analysis]) -> BTreeMap<String, f64> {
    let words: Vec<&Analysis> = analyses
        .iter()
        .filter(|a| a.token.kind == TokenKind::Word)
        .collect();
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    for analysis in &words {
        *counts
            .entry(analysis.category.name().to_string())
            .or_default() += 1;
    }
    let total = words.len() as f64;
    counts
        .into_iter()
        .map(|(category, count)| (category, 100.0 * count as f64 / total))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pipeline::Analyzer;

    fn gold_from(analyses: &[Analysis]) -> Vec<GoldRecord> {
        analyses
            .iter()
            .map(|a| GoldRecord {
                surface: a.token.surface.clone(),
                category: a.category.name().to_string(),
                lemma: Some(a.lemma.clone()),
            })
            .collect()
    }

    #[test]
    fn perfect_predictions_score_one() {
        let analyzer = Analyzer::bundled();
        let analyses = analyzer.analyze("تعتمد معظم بلدان العالم على الحاسب");
        let gold = gold_from(&analyses);
        let report = evaluate(&analyses, &gold, &EvalOptions::default()).unwrap();
        assert_eq!(report.pos_accuracy, 1.0);
        assert_eq!(report.lemma_accuracy, Some(1.0));
    }

    #[test]
    fn accuracy_counts_exact_matches() {
        let analyzer = Analyzer::bundled();
        let analyses = analyzer.analyze("في العالم العربي");
        let mut gold = gold_from(&analyses);
        gold[2].category = "Verb".to_string(); // force one disagreement
        let report = evaluate(&analyses, &gold, &EvalOptions::default()).unwrap();
        assert!((report.pos_accuracy - 2.0 / 3.0).abs() < 1e-9);
    }

    #[test]
    fn length_mismatch_is_an_error() {
        let analyzer = Analyzer::bundled();
        let analyses = analyzer.analyze("في العالم");
        let gold = vec![GoldRecord {
            surface: "في".to_string(),
            category: "Particle".to_string(),
            lemma: None,
        }];
        assert!(matches!(
            evaluate(&analyses, &gold, &EvalOptions::default()),
            Err(EvalError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn surface_mismatch_names_position() {
        let analyzer = Analyzer::bundled();
        let analyses = analyzer.analyze("في العالم");
        let mut gold = gold_from(&analyses);
        gold[1].surface = "البيت".to_string();
        match evaluate(&analyses, &gold, &EvalOptions::default()) {
            Err(EvalError::SurfaceMismatch { position, .. }) => assert_eq!(position, 1),
            other => panic!("expected surface mismatch, got {other:?}"),
        }
    }

    #[test]
    fn confusion_diagonal_equals_accuracy() {
        let analyzer = Analyzer::bundled();
        let analyses = analyzer.analyze("تعتمد معظم بلدان العالم على استخدام الانظمة");
        let mut gold = gold_from(&analyses);
        gold[0].category = "Noun".to_string();
        let report = evaluate(&analyses, &gold, &EvalOptions::default()).unwrap();
        let diagonal: usize = report
            .confusion
            .iter()
            .filter_map(|(g, row)| row.get(g))
            .sum();
        assert!((diagonal as f64 / report.scored_tokens as f64 - report.pos_accuracy).abs() < 1e-9);
    }

    #[test]
    fn evaluation_is_order_independent() {
        let analyzer = Analyzer::bundled();
        let analyses = analyzer.analyze("تعتمد معظم بلدان العالم على استخدام الانظمة");
        let mut gold = gold_from(&analyses);
        gold[0].category = "Noun".to_string();
        gold[3].category = "Verb".to_string();
        let original = evaluate(&analyses, &gold, &EvalOptions::default()).unwrap();

        // Shuffle predictions and gold with the same permutation.
        let permutation = [3usize, 0, 6, 1, 5, 2, 4];
        let shuffled_pred: Vec<Analysis> =
            permutation.iter().map(|&i| analyses[i].clone()).collect();
        let shuffled_gold: Vec<GoldRecord> = permutation.iter().map(|&i| gold[i].clone()).collect();
        let shuffled = evaluate(&shuffled_pred, &shuffled_gold, &EvalOptions::default()).unwrap();

        assert_eq!(original.pos_accuracy, shuffled.pos_accuracy);
        assert_eq!(original.per_category, shuffled.per_category);
        assert_eq!(original.confusion, shuffled.confusion);
        assert_eq!(original.distribution, shuffled.distribution);
    }

    #[test]
    fn confusion_row_sums_equal_gold_counts() {
        let analyzer = Analyzer::bundled();
        let analyses = analyzer.analyze("تعتمد معظم بلدان العالم على استخدام الانظمة المبنية");
        let mut gold = gold_from(&analyses);
        gold[2].category = "Verb".to_string();
        gold[5].category = "Adjective".to_string();
        let report = evaluate(&analyses, &gold, &EvalOptions::default()).unwrap();
        let mut gold_counts: BTreeMap<String, usize> = BTreeMap::new();
        for record in &gold {
            *gold_counts.entry(record.category.clone()).or_default() += 1;
        }
        for (category, row) in &report.confusion {
            let row_sum: usize = row.values().sum();
            assert_eq!(row_sum, gold_counts[category], "row {category}");
        }
    }

    #[test]
    fn distribution_of_empty_input_is_empty() {
        assert!(tag_distribution(&[]).is_empty());
    }

    #[test]
    fn distribution_of_uniform_particles() {
        let analyzer = Analyzer::bundled();
        let analyses = analyzer.analyze("في على عن");
        let distribution = tag_distribution(&analyses);
        assert_eq!(distribution.len(), 1);
        assert!((distribution["Particle"] - 100.0).abs() < 1e-9);
    }

    #[test]
    fn punctuation_excluded_by_default() {
        let analyzer = Analyzer::bundled();
        let analyses = analyzer.analyze("في العالم.");
        let gold = gold_from(&analyses);
        let report = evaluate(&analyses, &gold, &EvalOptions::default()).unwrap();
        assert_eq!(report.scored_tokens, 2);
        let include = EvalOptions {
            include_non_words: true,
            ..Default::default()
        };
        let report = evaluate(&analyses, &gold, &include).unwrap();
        assert_eq!(report.scored_tokens, 3);
    }
}
