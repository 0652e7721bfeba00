//! Lemma generation: perfective third-person masculine singular for
//! verbs, singular indefinite for nominals.

use crate::lexicon::LexiconBundle;
use crate::morpho::{instantiate, PatternMatch, Segmentation};
use crate::tagger::{Analysis, Category, LemmaMethod};

/// A generated lemma with the rule that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaResult {
    pub lemma: String,
    pub method: LemmaMethod,
}

impl LemmaResult {
    fn new(lemma: impl Into<String>, method: LemmaMethod) -> Self {
        LemmaResult {
            lemma: lemma.into(),
            method,
        }
    }
}

/// Lemma of a verb stem.
///
/// The matched inflected template maps to a perfective template which is
/// instantiated with the verified root; most mappings reduce to the root
/// itself or to the stem when the stem is already perfective. Without a
/// pattern the stem passes through.
pub fn verb_lemma(
    stem: &str,
    pattern: Option<&PatternMatch>,
    bundle: &LexiconBundle,
) -> LemmaResult {
    let Some(m) = pattern else {
        return LemmaResult::new(stem, LemmaMethod::Passthrough);
    };
    if let Some(target) = bundle.verb_lemma_target(&m.pattern_name) {
        // Load-time validation pins source and target to the same arity.
        let lemma =
            instantiate(target, &m.root).expect("lemma template arity is validated at load time");
        let method = if lemma == m.root {
            LemmaMethod::RootIdentity
        } else {
            LemmaMethod::PatternMap
        };
        return LemmaResult::new(lemma, method);
    }
    if m.root == stem {
        return LemmaResult::new(stem, LemmaMethod::RootIdentity);
    }
    LemmaResult::new(stem, LemmaMethod::Passthrough)
}

/// Lemma of a noun or adjective.
///
/// Rule order: broken-plural dictionary, sound masculine plural
/// stripping, feminine plural stripping with the feminine-singular
/// dictionary, construct-taa substitution before attached pronouns,
/// article removal, passthrough. Derivational feminine endings stripped
/// during segmentation are restored first.
pub fn noun_lemma(stem: &str, seg: Option<&Segmentation>, bundle: &LexiconBundle) -> LemmaResult {
    // Work on the nominal base: the stem plus any derivational ending
    // (ة / ية) the segmentation removed.
    let mut base = stem.to_string();
    if let Some(suffix) = seg.and_then(|s| s.suffix.as_ref()) {
        if suffix.features.restore {
            base.push_str(&suffix.surface);
        }
    }

    // The article never survives into a lemma; strip it up front so the
    // dictionaries see the core.
    let core = strip_article(&base);

    if let Some(singular) = bundle.broken_plural_singular(core) {
        return LemmaResult::new(singular, LemmaMethod::BrokenPluralDict);
    }

    // Construct taa before an attached pronoun: the lemma restores the
    // taa marbuta.
    if let Some(suffix) = seg.and_then(|s| s.suffix.as_ref()) {
        if suffix.features.taa {
            return LemmaResult::new(format!("{core}ة"), LemmaMethod::TaaSubstitution);
        }
        if suffix.features.pronoun && core.ends_with('ت') {
            let trimmed: String = without_last(core);
            return LemmaResult::new(format!("{trimmed}ة"), LemmaMethod::TaaSubstitution);
        }
    }

    // Sound masculine plural endings, either stripped by segmentation or
    // still attached (direct calls).
    if let Some(suffix) = seg.and_then(|s| s.suffix.as_ref()) {
        let sound_plural = matches!(suffix.surface.as_str(), "ون" | "ين" | "ان" | "ات");
        if sound_plural {
            if suffix.surface == "ات" && bundle.is_feminine_singular_base(core) {
                return LemmaResult::new(format!("{core}ة"), LemmaMethod::FeminineDict);
            }
            return LemmaResult::new(core, LemmaMethod::SuffixStrip);
        }
    }
    for ending in ["ون", "ين"] {
        if let Some(cut) = core.strip_suffix(ending) {
            if cut.chars().count() >= 2 {
                return LemmaResult::new(cut, LemmaMethod::SuffixStrip);
            }
        }
    }
    if let Some(cut) = core.strip_suffix("ات") {
        if cut.chars().count() >= 2 {
            if bundle.is_feminine_singular_base(cut) {
                return LemmaResult::new(format!("{cut}ة"), LemmaMethod::FeminineDict);
            }
            return LemmaResult::new(cut, LemmaMethod::SuffixStrip);
        }
    }

    LemmaResult::new(core, LemmaMethod::Passthrough)
}

fn strip_article(word: &str) -> &str {
    let mut chars = word.chars();
    if chars.next() == Some('ا') && chars.next() == Some('ل') {
        let rest = chars.as_str();
        if rest.chars().count() >= 2 {
            return rest;
        }
    }
    word
}

fn without_last(word: &str) -> String {
    let mut chars: Vec<char> = word.chars().collect();
    chars.pop();
    chars.into_iter().collect()
}

/// Fill in the lemma of a tagged analysis.
pub fn lemmatize(analysis: &mut Analysis, bundle: &LexiconBundle) {
    let result = match &analysis.category {
        Category::Verb => verb_lemma(analysis.stem(), analysis.pattern.as_ref(), bundle),
        Category::Noun | Category::Adjective | Category::ProperNoun => {
            noun_lemma(analysis.stem(), analysis.segmentation.as_ref(), bundle)
        }
        // Particles, numbers, punctuation, and unknowns keep their
        // surface form.
        _ => LemmaResult::new(analysis.token.surface.clone(), LemmaMethod::Passthrough),
    };
    analysis.lemma = result.lemma;
    analysis.lemma_method = result.method;
}
