//! End-to-end analyzer: normalize, tokenize, tag, re-categorize
//! adjectives, lemmatize.

use std::sync::Arc;

use crate::lemma::lemmatize;
use crate::lexicon::{LexiconBundle, NextWordHint};
use crate::tagger::{retag_adjectives, tag_token, Analysis, TagContext, TaggerOptions};
use crate::text::{tokenize_with, NormalizeOptions, TokenKind};

/// Analyzer configuration.
#[derive(Debug, Clone, Copy, Default)]
pub struct AnalyzerOptions {
    pub normalize: NormalizeOptions,
    pub tagger: TaggerOptions,
}

impl AnalyzerOptions {
    /// Minimum-resource configuration: closed words, affix evidence, and
    /// the adjective rule only; patterns, roots, and the auxiliary
    /// dictionaries are disabled.
    pub fn minimal() -> Self {
        AnalyzerOptions {
            normalize: NormalizeOptions::default(),
            tagger: TaggerOptions {
                use_proper_nouns: false,
                use_templatic_morphology: false,
            },
        }
    }
}

/// A reusable analyzer over an immutable lexicon bundle.
///
/// The bundle is shared; analyzers are cheap to clone and safe to use
/// from multiple threads.
#[derive(Debug, Clone)]
pub struct Analyzer {
    bundle: Arc<LexiconBundle>,
    options: AnalyzerOptions,
}

impl Analyzer {
    /// Analyzer over the compiled-in seed lexicon.
    pub fn bundled() -> Self {
        Analyzer::new(
            Arc::new(LexiconBundle::bundled()),
            AnalyzerOptions::default(),
        )
    }

    pub fn new(bundle: Arc<LexiconBundle>, options: AnalyzerOptions) -> Self {
        Analyzer { bundle, options }
    }

    pub fn bundle(&self) -> &LexiconBundle {
        &self.bundle
    }

    pub fn options(&self) -> &AnalyzerOptions {
        &self.options
    }

    /// Analyze a text: one [`Analysis`] per token, fully tagged and
    /// lemmatized.
    pub fn analyze(&self, text: &str) -> Vec<Analysis> {
        let tokens = tokenize_with(text, self.options.normalize);
        let mut ctx = TagContext::default();
        let mut analyses = Vec::with_capacity(tokens.len());
        for token in &tokens {
            let analysis = tag_token(token, &ctx, &self.bundle, &self.options.tagger);
            if token.kind == TokenKind::Word {
                // Punctuation and numbers neither reset the previous
                // category nor consume a pending hint.
                ctx.previous = Some(analysis.category.clone());
                ctx.pending_hint = pending_hint(&analysis, &self.bundle);
            }
            analyses.push(analysis);
        }
        retag_adjectives(&mut analyses);
        for analysis in &mut analyses {
            lemmatize(analysis, &self.bundle);
        }
        analyses
    }
}

fn pending_hint(analysis: &Analysis, bundle: &LexiconBundle) -> Option<NextWordHint> {
    if let crate::tagger::Category::Particle(_) = analysis.category {
        let stem = analysis.stem();
        if let Some(entry) = bundle.lookup_closed(stem) {
            if entry.hint != NextWordHint::None {
                return Some(entry.hint);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::features::Tense;
    use crate::tagger::Category;

    #[test]
    fn analyzes_a_short_sentence() {
        let analyzer = Analyzer::bundled();
        let analyses = analyzer.analyze("في العراق.");
        assert_eq!(analyses.len(), 3);
        assert_eq!(
            analyses[0].category,
            Category::Particle("preposition".into())
        );
        assert_eq!(analyses[1].category, Category::ProperNoun);
        assert_eq!(analyses[2].category, Category::Punct);
    }

    #[test]
    fn verb_hint_resolves_following_ambiguity() {
        let analyzer = Analyzer::bundled();
        let analyses = analyzer.analyze("سوف يستتب");
        assert_eq!(analyses[1].category, Category::Verb);
    }

    #[test]
    fn lemmas_are_filled_in() {
        let analyzer = Analyzer::bundled();
        let analyses = analyzer.analyze("تعتمد معظم بلدان العالم");
        let lemmas: Vec<&str> = analyses.iter().map(|a| a.lemma.as_str()).collect();
        assert_eq!(lemmas, vec!["اعتمد", "معظم", "بلد", "عالم"]);
    }

    #[test]
    fn verb_features_and_demotion() {
        let analyzer = Analyzer::bundled();
        let analyses = analyzer.analyze("تعتمد تعتمد");
        assert_eq!(analyses[0].category, Category::Verb);
        assert_eq!(analyses[0].features.tense, Some(Tense::Present));
        // Two verbs never follow one another.
        assert_eq!(analyses[1].category, Category::Noun);
    }

    #[test]
    fn analyzers_share_bundles_across_threads() {
        let analyzer = Analyzer::bundled();
        let handles: Vec<_> = (0..4)
            .map(|_| {
                let analyzer = analyzer.clone();
                std::thread::spawn(move || analyzer.analyze("في العالم العربي").len())
            })
            .collect();
        for handle in handles {
            assert_eq!(handle.join().unwrap(), 3);
        }
    }
}
