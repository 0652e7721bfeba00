//! Rule-based Arabic lemmatizer and POS tagger.
//!
//! The analyzer works in two phases. The tagging phase looks a word up in
//! the closed-word and proper-noun dictionaries, then segments it
//! (longest affix first), matches the stem against templatic patterns,
//! verifies the extracted root, and decides the category from affix
//! classes, pattern classes, and sentence context. The lemma phase maps
//! verbs to their perfective citation form through pattern-level rules
//! and reduces nominals to the singular indefinite with the help of small
//! auxiliary dictionaries (feminine singulars, irregular plurals).
//!
//! All resources live in editable tab-separated files; a seed set is
//! compiled in. See [`pipeline::Analyzer`] for the end-to-end entry
//! point.

pub mod chars;
pub mod error;
pub mod eval;
pub mod features;
pub mod lemma;
pub mod lexicon;
pub mod morpho;
pub mod pipeline;
pub mod render;
pub mod tagger;
pub mod text;

pub use error::{AnalysisError, EvalError, LexiconError};
pub use eval::{
    evaluate, evaluate_records, parse_gold, parse_predictions, tag_distribution, EvalOptions,
    EvalReport, GoldRecord, PredRecord,
};
pub use features::{Count, Features, Gender, Tense, Voice};
pub use lemma::{lemmatize, noun_lemma, verb_lemma, LemmaResult};
pub use lexicon::{load_bundle, BundleCounts, LexiconBundle};
pub use morpho::{
    instantiate, match_pattern, strip_affixes, verify_root, PatternMatch, Segmentation,
};
pub use pipeline::{Analyzer, AnalyzerOptions};
pub use render::{render_tag, OutputRecord};
pub use tagger::{
    apply_context_rules, classify_by_affix, classify_by_pattern, is_definite, retag_adjectives,
    tag_token, Analysis, Category, LemmaMethod, TagContext, TaggerOptions,
};
pub use text::{
    normalize, normalize_with, tokenize, tokenize_with, NormalizeOptions, Token, TokenKind,
};
