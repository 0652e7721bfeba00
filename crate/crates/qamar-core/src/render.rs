//! Treebank-style tag rendering and the flat output record.

use serde::Serialize;

use crate::lexicon::LexiconBundle;
use crate::tagger::{Analysis, Category};

/// Render the reduced treebank-style tag for an analysis.
///
/// Nouns render NN/NNS with a DT prefix when the definite article is
/// present, adjectives JJ/DTJJ, verbs VV, proper nouns NNP/DTNNP,
/// particles their subcategory code, numbers NUM, punctuation PUNC. A
/// stripped proclitic appends ` +` on the open classes.
pub fn render_tag(analysis: &Analysis, bundle: &LexiconBundle) -> String {
    use crate::features::Count;

    let base = match &analysis.category {
        Category::Noun => {
            let plural = analysis.features.count == Some(Count::Plural);
            let stem = if plural { "NNS" } else { "NN" };
            with_article(analysis, stem)
        }
        Category::Adjective => with_article(analysis, "JJ"),
        Category::Verb => "VV".to_string(),
        Category::ProperNoun => with_article(analysis, "NNP"),
        Category::Particle(subcategory) => bundle
            .render_code(subcategory)
            .unwrap_or("particle")
            .to_string(),
        Category::Number => "NUM".to_string(),
        Category::Punct => "PUNC".to_string(),
        Category::Unknown => "unknown".to_string(),
    };

    let open_class = matches!(
        analysis.category,
        Category::Noun | Category::Adjective | Category::Verb | Category::ProperNoun
    );
    if open_class && analysis.has_proclitic() {
        format!("{base} +")
    } else {
        base
    }
}

fn with_article(analysis: &Analysis, stem: &str) -> String {
    if analysis.has_article() {
        format!("DT{stem}")
    } else {
        stem.to_string()
    }
}

/// One output row, stable column order:
/// surface, tag, category, lemma, root, pattern, features, flags.
#[derive(Debug, Clone, Serialize)]
pub struct OutputRecord {
    pub surface: String,
    pub tag: String,
    pub category: String,
    pub lemma: String,
    pub root: String,
    pub pattern: String,
    pub features: String,
    pub flags: String,
}

impl OutputRecord {
    pub fn from_analysis(analysis: &Analysis, bundle: &LexiconBundle) -> Self {
        OutputRecord {
            surface: analysis.token.surface.clone(),
            tag: render_tag(analysis, bundle),
            category: analysis.category.name().to_string(),
            lemma: analysis.lemma.clone(),
            root: analysis.root.clone().unwrap_or_else(|| "-".to_string()),
            pattern: analysis
                .pattern
                .as_ref()
                .map(|m| m.display.clone())
                .unwrap_or_else(|| "-".to_string()),
            features: analysis.features.summary(),
            flags: if analysis.has_proclitic() {
                "+".to_string()
            } else {
                "-".to_string()
            },
        }
    }

    pub fn tsv_line(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.surface,
            self.tag,
            self.category,
            self.lemma,
            self.root,
            self.pattern,
            self.features,
            self.flags
        )
    }
}
