//! POS tagging: closed-word and proper-noun lookup, morphological
//! disambiguation, context rules, and the adjective re-categorization
//! pass.

use serde::Serialize;

use crate::error::AnalysisError;
use crate::features::{Count, Features, Gender, Tense};
use crate::lexicon::{LexiconBundle, NextWordHint, PatternClass};
use crate::morpho::{self, AffixSignal, PatternMatch, Segmentation};
use crate::text::{Token, TokenKind};

/// Lexical category of a token.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub enum Category {
    Noun,
    ProperNoun,
    Adjective,
    Verb,
    /// Closed-class word with its subcategory (preposition, conjunction,
    /// ...).
    Particle(String),
    Number,
    Punct,
    Unknown,
}

impl Category {
    pub fn is_nominal(&self) -> bool {
        matches!(
            self,
            Category::Noun | Category::Adjective | Category::ProperNoun
        )
    }

    /// Name without the particle subcategory, as used in gold files.
    pub fn name(&self) -> &'static str {
        match self {
            Category::Noun => "Noun",
            Category::ProperNoun => "ProperNoun",
            Category::Adjective => "Adjective",
            Category::Verb => "Verb",
            Category::Particle(_) => "Particle",
            Category::Number => "Number",
            Category::Punct => "Punct",
            Category::Unknown => "Unknown",
        }
    }
}

/// How the lemma of an analysis was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LemmaMethod {
    RootIdentity,
    PatternMap,
    SuffixStrip,
    FeminineDict,
    TaaSubstitution,
    BrokenPluralDict,
    Passthrough,
}

/// Full per-token analysis.
#[derive(Debug, Clone, PartialEq)]
pub struct Analysis {
    pub token: Token,
    pub category: Category,
    pub features: Features,
    pub segmentation: Option<Segmentation>,
    pub pattern: Option<PatternMatch>,
    pub root: Option<String>,
    pub lemma: String,
    pub lemma_method: LemmaMethod,
}

impl Analysis {
    /// The stem morphology operates on: segmentation stem, or the whole
    /// surface when nothing was stripped.
    pub fn stem(&self) -> &str {
        self.segmentation
            .as_ref()
            .map(|s| s.stem.as_str())
            .unwrap_or(&self.token.surface)
    }

    /// True when a definite-article prefix was recognised.
    pub fn has_article(&self) -> bool {
        self.segmentation
            .as_ref()
            .and_then(|s| s.prefix.as_ref())
            .is_some_and(|p| p.features.definite)
    }

    /// True when an attached-pronoun suffix was recognised.
    pub fn has_pronoun_suffix(&self) -> bool {
        self.segmentation
            .as_ref()
            .and_then(|s| s.suffix.as_ref())
            .is_some_and(|s| s.features.pronoun)
    }

    /// True when a proclitic was stripped (conjunction or preposition,
    /// including the article-embedded lam).
    pub fn has_proclitic(&self) -> bool {
        self.segmentation.as_ref().is_some_and(|s| {
            !s.proclitics.is_empty() || s.prefix.as_ref().is_some_and(|p| p.features.lam)
        })
    }
}

/// Rolling context consulted while tagging a sequence.
#[derive(Debug, Clone, Default)]
pub struct TagContext {
    /// Category of the previous word token, if any.
    pub previous: Option<Category>,
    /// Hint left by a closed word about the next word's category.
    pub pending_hint: Option<NextWordHint>,
}

/// Category evidence before context rules resolve it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CategoryCandidate {
    Resolved(Category),
    Ambiguous,
}

/// Tagging options; the defaults enable the full pipeline.
#[derive(Debug, Clone, Copy)]
pub struct TaggerOptions {
    /// Consult the proper-noun dictionary.
    pub use_proper_nouns: bool,
    /// Use patterns, roots, and the auxiliary dictionaries. When off the
    /// tagger falls back to closed words and affix evidence only.
    pub use_templatic_morphology: bool,
}

impl Default for TaggerOptions {
    fn default() -> Self {
        TaggerOptions {
            use_proper_nouns: true,
            use_templatic_morphology: true,
        }
    }
}

/// Classify a segmentation by its affix classes alone.
pub fn classify_by_affix(seg: &Segmentation) -> AffixSignal {
    seg.affix_signal()
}

/// Classify a verified pattern match, consulting the third-class verb
/// dictionary for general patterns.
pub fn classify_by_pattern(m: &PatternMatch, bundle: &LexiconBundle) -> Category {
    match m.class {
        PatternClass::Verb => Category::Verb,
        PatternClass::Noun => Category::Noun,
        PatternClass::General => {
            if third_class_lookup(&m.stem, bundle) {
                Category::Verb
            } else {
                Category::Noun
            }
        }
    }
}

/// Dictionary lookup for a template-form stem; an initial bare alef also
/// tries the hamzated spellings the dictionary may use.
fn third_class_lookup(stem: &str, bundle: &LexiconBundle) -> bool {
    if bundle.is_third_class_verb(stem) {
        return true;
    }
    let mut chars = stem.chars();
    if chars.next() == Some('ا') {
        let rest = chars.as_str();
        for initial in ['أ', 'إ', 'آ'] {
            if bundle.is_third_class_verb(&format!("{initial}{rest}")) {
                return true;
            }
        }
    }
    false
}

/// Apply sequence-level rules to a candidate category.
///
/// Two verbs never follow one another, so a verb candidate after a verb
/// is demoted to a noun. A pending hint from a closed word resolves an
/// otherwise ambiguous candidate.
pub fn apply_context_rules(ctx: &TagContext, candidate: CategoryCandidate) -> CategoryCandidate {
    match candidate {
        CategoryCandidate::Resolved(Category::Verb) if ctx.previous == Some(Category::Verb) => {
            CategoryCandidate::Resolved(Category::Noun)
        }
        CategoryCandidate::Ambiguous => match ctx.pending_hint {
            Some(NextWordHint::Noun) => CategoryCandidate::Resolved(Category::Noun),
            Some(NextWordHint::Verb) => {
                if ctx.previous == Some(Category::Verb) {
                    CategoryCandidate::Resolved(Category::Noun)
                } else {
                    CategoryCandidate::Resolved(Category::Verb)
                }
            }
            _ => CategoryCandidate::Ambiguous,
        },
        other => other,
    }
}

/// Whether a nominal analysis is definite: definite article, attached
/// possessive pronoun, or proper noun.
pub fn is_definite(analysis: &Analysis) -> Result<bool, AnalysisError> {
    if !analysis.category.is_nominal() {
        return Err(AnalysisError::CategoryContract(
            analysis.category.name().to_string(),
        ));
    }
    Ok(analysis.has_article()
        || analysis.has_pronoun_suffix()
        || analysis.category == Category::ProperNoun)
}

/// Tag one token given the rolling context.
pub fn tag_token(
    token: &Token,
    ctx: &TagContext,
    bundle: &LexiconBundle,
    options: &TaggerOptions,
) -> Analysis {
    match token.kind {
        TokenKind::Number => return trivial(token, Category::Number),
        TokenKind::Punctuation => return trivial(token, Category::Punct),
        TokenKind::Word => {}
    }

    // Level one: closed-word dictionary, on the surface and behind a
    // single conjunction proclitic.
    if let Some(analysis) = closed_word_analysis(token, bundle) {
        return analysis;
    }

    // Level two: proper-noun dictionary, allowing for article and
    // proclitics.
    if options.use_proper_nouns {
        if let Some(analysis) = proper_noun_analysis(token, bundle) {
            return analysis;
        }
    }

    // Levels three and four: morphological analysis.
    morphological_analysis(token, ctx, bundle, options)
}

fn trivial(token: &Token, category: Category) -> Analysis {
    Analysis {
        token: token.clone(),
        category,
        features: Features::none(),
        segmentation: None,
        pattern: None,
        root: None,
        lemma: token.surface.clone(),
        lemma_method: LemmaMethod::Passthrough,
    }
}

fn closed_word_analysis(token: &Token, bundle: &LexiconBundle) -> Option<Analysis> {
    let surface = &token.surface;
    if let Some(entry) = bundle.lookup_closed(surface) {
        return Some(particle(
            token,
            entry.subcategory.clone(),
            Segmentation::bare(surface),
        ));
    }
    // A conjunction proclitic may precede a particle (e.g. a word-initial
    // waw before a closed adverb).
    let mut chars = surface.chars();
    let first = chars.next()?;
    if matches!(first, 'و' | 'ف') {
        let rest: String = chars.collect();
        if rest.chars().count() >= 2 {
            if let Some(entry) = bundle.lookup_closed(&rest) {
                let mut seg = Segmentation::bare(&rest);
                seg.proclitics.push(first);
                return Some(particle(token, entry.subcategory.clone(), seg));
            }
        }
    }
    None
}

fn particle(token: &Token, subcategory: String, seg: Segmentation) -> Analysis {
    Analysis {
        token: token.clone(),
        category: Category::Particle(subcategory),
        features: Features::none(),
        segmentation: Some(seg),
        pattern: None,
        root: None,
        lemma: token.surface.clone(),
        lemma_method: LemmaMethod::Passthrough,
    }
}

fn proper_noun_analysis(token: &Token, bundle: &LexiconBundle) -> Option<Analysis> {
    let article = bundle
        .prefixes()
        .iter()
        .find(|p| p.features.definite && p.surface == "ال")
        .cloned();

    let variants = proper_variants(&token.surface);
    for (proclitics, with_article, stem) in variants {
        if bundle.lookup_proper(&stem) {
            let seg = Segmentation {
                proclitics,
                prefix: if with_article { article.clone() } else { None },
                stem: stem.clone(),
                suffix: None,
            };
            let definite = true;
            let features = Features::nominal(definite, None, None);
            return Some(Analysis {
                token: token.clone(),
                category: Category::ProperNoun,
                features,
                segmentation: Some(seg),
                pattern: None,
                root: None,
                lemma: stem,
                lemma_method: LemmaMethod::Passthrough,
            });
        }
    }
    None
}

/// (proclitics, article-stripped, stem) readings tried against the
/// proper-noun dictionary, most explicit first.
fn proper_variants(surface: &str) -> Vec<(Vec<char>, bool, String)> {
    let chars: Vec<char> = surface.chars().collect();
    let mut variants = Vec::new();
    variants.push((Vec::new(), false, surface.to_string()));
    if chars.len() > 3 && chars[0] == 'ا' && chars[1] == 'ل' {
        variants.push((Vec::new(), true, chars[2..].iter().collect()));
    }
    if chars.len() > 2 && matches!(chars[0], 'و' | 'ف') {
        variants.push((vec![chars[0]], false, chars[1..].iter().collect()));
        if chars.len() > 4 && chars[1] == 'ا' && chars[2] == 'ل' {
            variants.push((vec![chars[0]], true, chars[3..].iter().collect()));
        }
    }
    variants
}

/// Evidence tier of a candidate segmentation; stronger evidence wins
/// regardless of enumeration order. An unambiguous affix backed by a
/// verified pattern on the stem is the strongest morphological signal; a
/// verified pattern alone still outranks a bare affix reading, which
/// keeps over-eager stripping in check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum EvidenceTier {
    BrokenPlural,
    AffixClassWithPattern,
    Pattern,
    AffixClass,
}

fn morphological_analysis(
    token: &Token,
    ctx: &TagContext,
    bundle: &LexiconBundle,
    options: &TaggerOptions,
) -> Analysis {
    let candidates = morpho::strip_affixes(&token.surface, bundle);

    let mut best: Option<(EvidenceTier, usize)> = None;
    for (idx, candidate) in candidates.iter().enumerate() {
        let tier = candidate_evidence(candidate, bundle, options);
        if let Some(tier) = tier {
            let better = match best {
                None => true,
                Some((best_tier, _)) => tier < best_tier,
            };
            if better {
                best = Some((tier, idx));
            }
        }
    }

    let seg = match best {
        Some((_, idx)) => candidates[idx].clone(),
        // No evidence anywhere: keep the word intact.
        None => Segmentation::bare(&token.surface),
    };

    // Fill pattern and root for the chosen stem, independent of which
    // evidence selected it.
    let pattern = if options.use_templatic_morphology {
        morpho::match_pattern(&seg.stem, bundle).into_iter().next()
    } else {
        None
    };

    let broken_plural = options.use_templatic_morphology
        && broken_applicable(&seg)
        && bundle.broken_plural_singular(&seg.stem).is_some();

    // Category: affix class first, then pattern class, then context.
    let candidate = match seg.affix_signal() {
        AffixSignal::Noun => CategoryCandidate::Resolved(Category::Noun),
        AffixSignal::Verb => CategoryCandidate::Resolved(Category::Verb),
        AffixSignal::Ambiguous => {
            if broken_plural {
                CategoryCandidate::Resolved(Category::Noun)
            } else if let Some(m) = &pattern {
                if options.use_templatic_morphology {
                    CategoryCandidate::Resolved(classify_by_pattern(m, bundle))
                } else {
                    CategoryCandidate::Ambiguous
                }
            } else {
                CategoryCandidate::Ambiguous
            }
        }
    };

    let candidate = apply_context_rules(ctx, candidate);
    let category = match candidate {
        CategoryCandidate::Resolved(category) => category,
        // Unanalyzable Arabic words read as nouns; only words carrying
        // foreign characters count as unknown.
        CategoryCandidate::Ambiguous => {
            let foreign = token
                .surface
                .chars()
                .any(|c| !crate::chars::is_arabic_letter(c));
            if foreign {
                Category::Unknown
            } else {
                Category::Noun
            }
        }
    };

    let features = compute_features(&category, &seg, pattern.as_ref(), broken_plural);
    let root = pattern.as_ref().map(|m| m.root.clone());

    Analysis {
        token: token.clone(),
        category,
        features,
        segmentation: Some(seg),
        pattern,
        root,
        lemma: token.surface.clone(),
        lemma_method: LemmaMethod::Passthrough,
    }
}

/// A broken-plural dictionary hit only counts when the stem is intact: no
/// stripped ending other than an attached pronoun.
fn broken_applicable(seg: &Segmentation) -> bool {
    match &seg.suffix {
        None => true,
        Some(suffix) => suffix.features.pronoun,
    }
}

fn candidate_evidence(
    seg: &Segmentation,
    bundle: &LexiconBundle,
    options: &TaggerOptions,
) -> Option<EvidenceTier> {
    if options.use_templatic_morphology
        && broken_applicable(seg)
        && bundle.broken_plural_singular(&seg.stem).is_some()
    {
        return Some(EvidenceTier::BrokenPlural);
    }
    let matches_pattern =
        options.use_templatic_morphology && !morpho::match_pattern(&seg.stem, bundle).is_empty();
    // A single-letter preposition clitic is only stripped on
    // morphological confirmation; the conjunctions and the lam are
    // frequent enough to strip on affix evidence alone.
    let speculative_clitic = seg.proclitics.iter().any(|c| matches!(c, 'ب' | 'ك'));
    if seg.affix_signal() != AffixSignal::Ambiguous {
        return if matches_pattern {
            Some(EvidenceTier::AffixClassWithPattern)
        } else if speculative_clitic {
            None
        } else {
            Some(EvidenceTier::AffixClass)
        };
    }
    if matches_pattern {
        return Some(EvidenceTier::Pattern);
    }
    None
}

fn compute_features(
    category: &Category,
    seg: &Segmentation,
    pattern: Option<&PatternMatch>,
    broken_plural: bool,
) -> Features {
    match category {
        Category::Verb => {
            let tense = pattern
                .and_then(|m| m.tense)
                .or_else(|| {
                    let past = seg.suffix.as_ref().is_some_and(|s| s.features.past);
                    if past {
                        Some(Tense::Past)
                    } else {
                        None
                    }
                })
                .unwrap_or_else(|| {
                    if seg.stem.starts_with('ي') {
                        Tense::Present
                    } else {
                        Tense::Past
                    }
                });
            Features::verbal(tense)
        }
        Category::Noun | Category::Adjective | Category::ProperNoun => {
            let article = seg.prefix.as_ref().is_some_and(|p| p.features.definite);
            let pronoun = seg.suffix.as_ref().is_some_and(|s| s.features.pronoun);
            let definite = article || pronoun || *category == Category::ProperNoun;
            let mut count = seg.suffix.as_ref().and_then(|s| s.features.count);
            let gender = seg.suffix.as_ref().and_then(|s| s.features.gender);
            if broken_plural {
                count = Some(Count::Plural);
            }
            Features::nominal(definite, count, gender)
        }
        _ => Features::none(),
    }
}

/// Re-label qualifying nouns as adjectives.
///
/// A noun becomes an adjective when the previous word token is a noun or
/// adjective, the two agree in count and gender, both are definite or
/// both indefinite, and the candidate carries no proclitic, no prefix
/// other than the article, and no attached pronoun. Count agreement
/// accepts a feminine singular after a plural (the concord non-human
/// plurals take), unless the plural's definiteness comes from a
/// possessive.
pub fn retag_adjectives(analyses: &mut [Analysis]) {
    let mut prev_word: Option<usize> = None;
    for idx in 0..analyses.len() {
        if analyses[idx].token.kind != TokenKind::Word {
            continue;
        }
        if analyses[idx].category == Category::Noun {
            if let Some(prev_idx) = prev_word {
                if adjective_conditions(&analyses[prev_idx], &analyses[idx]) {
                    analyses[idx].category = Category::Adjective;
                }
            }
        }
        prev_word = Some(idx);
    }
}

fn adjective_conditions(prev: &Analysis, cur: &Analysis) -> bool {
    if !matches!(prev.category, Category::Noun | Category::Adjective) {
        return false;
    }
    // No proclitic and no prefix other than the definite article.
    if cur.has_proclitic() || cur.has_pronoun_suffix() {
        return false;
    }
    if let Some(prefix) = cur.segmentation.as_ref().and_then(|s| s.prefix.as_ref()) {
        if !prefix.features.definite || prefix.features.lam {
            return false;
        }
    }
    // Both definite or both indefinite.
    if prev.features.definite != cur.features.definite {
        return false;
    }
    let definite_pair = cur.features.definite;

    // Gender agreement: a definite pair tolerates unmarked gender, an
    // indefinite pair needs overt agreement.
    let gender_ok = match (prev.features.gender, cur.features.gender) {
        (Some(a), Some(b)) => a == b,
        _ => definite_pair,
    };
    if !gender_ok {
        return false;
    }

    // Count agreement, with the non-human plural concord special case.
    let count_equal = match (prev.features.count, cur.features.count) {
        (Some(a), Some(b)) => a == b,
        _ => true,
    };
    let plural_concord = prev.features.count == Some(Count::Plural)
        && matches!(cur.features.count, Some(Count::Singular) | None)
        && cur.features.gender == Some(Gender::Feminine)
        && !prev.has_pronoun_suffix();
    count_equal || plural_concord
}
