//! Lexicon resources: closed words, proper nouns, roots, patterns, affix
//! tables, and the auxiliary dictionaries consulted during lemma
//! generation.
//!
//! Everything is loaded from a directory of tab-separated UTF-8 files so
//! the inventories stay hand-editable. `#` starts a comment line; the
//! closed-words file additionally declares its subcategory inventory with
//! `#!` directives. A seed set reconstructed from standard references is
//! compiled into the crate and used when no directory is given.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::path::Path;

use crate::error::LexiconError;
use crate::features::{Count, Gender, Tense};
use crate::text::normalize;

/// Hint a closed word gives about the category of the following word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NextWordHint {
    None,
    Noun,
    Verb,
}

/// One closed-class (particle) entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedWordEntry {
    pub surface: String,
    pub subcategory: String,
    pub hint: NextWordHint,
}

/// A declared closed-word subcategory with its rendered tag code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedGroup {
    pub name: String,
    pub render: String,
}

/// Class of a templatic pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PatternClass {
    Verb,
    Noun,
    /// Usable as verb or noun; disambiguated against the third-class verb
    /// dictionary.
    General,
}

/// One slot of a pattern template.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slot {
    /// A fixed letter of the template.
    Literal(char),
    /// Root consonant at the given position (1-based).
    Root(u8),
    /// Root consonant position that surfaces as a long alef in hollow
    /// stems: matches a surface alef against a weak root letter, and
    /// instantiates weak root letters as alef.
    RootHollow(u8),
}

/// A templatic pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternEntry {
    /// Unique key used by the lemma map (hollow variants carry a `~`).
    pub name: String,
    /// Cited form shown in output.
    pub display: String,
    pub slots: Vec<Slot>,
    pub class: PatternClass,
    /// Tense contributed when the pattern is read as a verb.
    pub tense: Option<Tense>,
    /// Number of root consonants.
    pub arity: u8,
}

impl PatternEntry {
    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    fn literal_count(&self) -> usize {
        self.slots
            .iter()
            .filter(|s| matches!(s, Slot::Literal(_)))
            .count()
    }

    fn hollow_count(&self) -> usize {
        self.slots
            .iter()
            .filter(|s| matches!(s, Slot::RootHollow(_)))
            .count()
    }
}

/// Affix distribution class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AffixClass {
    NounOnly,
    VerbOnly,
    Either,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AffixPosition {
    Prefix,
    Suffix,
}

/// Features contributed by an affix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct AffixFeatures {
    /// Definite article.
    pub definite: bool,
    /// Attached pronoun (possessive on nominals).
    pub pronoun: bool,
    /// Feminine construct taa preceding an attached pronoun; the lemma
    /// substitutes a taa marbuta for it.
    pub taa: bool,
    /// Derivational ending re-attached when forming the lemma (ة, ية).
    pub restore: bool,
    /// Prefix embeds a preposition proclitic (لل).
    pub lam: bool,
    /// Past-tense subject marker on verbs.
    pub past: bool,
    pub count: Option<Count>,
    pub gender: Option<Gender>,
}

/// One prefix or suffix entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffixEntry {
    pub surface: String,
    pub position: AffixPosition,
    pub class: AffixClass,
    pub features: AffixFeatures,
    /// Minimum stem length (in characters) left after stripping.
    pub min_stem: usize,
}

/// Counts of the loaded resources, exposed for verification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BundleCounts {
    pub closed_words: usize,
    pub closed_groups: usize,
    pub proper_nouns: usize,
    pub tri_roots: usize,
    pub quad_roots: usize,
    pub patterns: usize,
    pub prefixes: usize,
    pub suffixes: usize,
    pub third_class_verbs: usize,
    pub feminine_singulars: usize,
    pub broken_plurals: usize,
    pub verb_lemma_mappings: usize,
}

/// All dictionary resources, immutable once loaded.
pub struct LexiconBundle {
    groups: Vec<ClosedGroup>,
    closed_words: HashMap<String, ClosedWordEntry>,
    proper_nouns: HashSet<String>,
    tri_roots: HashSet<String>,
    quad_roots: HashSet<String>,
    patterns: Vec<PatternEntry>,
    pattern_index: HashMap<String, usize>,
    /// Pattern indices grouped by template length, specificity-ordered.
    patterns_by_len: HashMap<usize, Vec<usize>>,
    prefixes: Vec<AffixEntry>,
    suffixes: Vec<AffixEntry>,
    third_class_verbs: HashSet<String>,
    feminine_singulars: HashSet<String>,
    broken_plural_map: HashMap<String, String>,
    verb_lemma_map: HashMap<String, String>,
}

impl fmt::Debug for LexiconBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LexiconBundle")
            .field("counts", &self.counts())
            .finish()
    }
}

/// File names expected inside a lexicon directory.
pub const FILE_CLOSED_WORDS: &str = "closed_words.tsv";
pub const FILE_PROPER_NOUNS: &str = "proper_nouns.tsv";
pub const FILE_ROOTS_TRI: &str = "roots_tri.tsv";
pub const FILE_ROOTS_QUAD: &str = "roots_quad.tsv";
pub const FILE_PATTERNS: &str = "patterns.tsv";
pub const FILE_PREFIXES: &str = "prefixes.tsv";
pub const FILE_SUFFIXES: &str = "suffixes.tsv";
pub const FILE_THIRD_CLASS_VERBS: &str = "verbs_third_class.tsv";
pub const FILE_FEMININE_SINGULAR: &str = "feminine_singular.tsv";
pub const FILE_BROKEN_PLURALS: &str = "broken_plurals.tsv";
pub const FILE_VERB_LEMMA_MAP: &str = "verb_lemma_map.tsv";

struct RawFiles {
    closed_words: String,
    proper_nouns: String,
    roots_tri: String,
    roots_quad: Option<String>,
    patterns: String,
    prefixes: String,
    suffixes: String,
    third_class_verbs: String,
    feminine_singular: String,
    broken_plurals: String,
    verb_lemma_map: String,
}

/// Load and validate a bundle from a directory of TSV files.
pub fn load_bundle(directory: &Path) -> Result<LexiconBundle, LexiconError> {
    let read = |name: &str| -> Result<String, LexiconError> {
        let path = directory.join(name);
        if !path.is_file() {
            return Err(LexiconError::MissingFile(path));
        }
        std::fs::read_to_string(&path).map_err(|source| LexiconError::Io { path, source })
    };
    let quad_path = directory.join(FILE_ROOTS_QUAD);
    let roots_quad = if quad_path.is_file() {
        Some(
            std::fs::read_to_string(&quad_path).map_err(|source| LexiconError::Io {
                path: quad_path,
                source,
            })?,
        )
    } else {
        None
    };

    let raw = RawFiles {
        closed_words: read(FILE_CLOSED_WORDS)?,
        proper_nouns: read(FILE_PROPER_NOUNS)?,
        roots_tri: read(FILE_ROOTS_TRI)?,
        roots_quad,
        patterns: read(FILE_PATTERNS)?,
        prefixes: read(FILE_PREFIXES)?,
        suffixes: read(FILE_SUFFIXES)?,
        third_class_verbs: read(FILE_THIRD_CLASS_VERBS)?,
        feminine_singular: read(FILE_FEMININE_SINGULAR)?,
        broken_plurals: read(FILE_BROKEN_PLURALS)?,
        verb_lemma_map: read(FILE_VERB_LEMMA_MAP)?,
    };
    LexiconBundle::parse(raw)
}

impl LexiconBundle {
    /// The seed lexicon compiled into the crate.
    pub fn bundled() -> LexiconBundle {
        let raw = RawFiles {
            closed_words: include_str!("../data/closed_words.tsv").to_string(),
            proper_nouns: include_str!("../data/proper_nouns.tsv").to_string(),
            roots_tri: include_str!("../data/roots_tri.tsv").to_string(),
            roots_quad: Some(include_str!("../data/roots_quad.tsv").to_string()),
            patterns: include_str!("../data/patterns.tsv").to_string(),
            prefixes: include_str!("../data/prefixes.tsv").to_string(),
            suffixes: include_str!("../data/suffixes.tsv").to_string(),
            third_class_verbs: include_str!("../data/verbs_third_class.tsv").to_string(),
            feminine_singular: include_str!("../data/feminine_singular.tsv").to_string(),
            broken_plurals: include_str!("../data/broken_plurals.tsv").to_string(),
            verb_lemma_map: include_str!("../data/verb_lemma_map.tsv").to_string(),
        };
        LexiconBundle::parse(raw).expect("bundled seed lexicon is valid")
    }

    fn parse(raw: RawFiles) -> Result<LexiconBundle, LexiconError> {
        let (groups, closed_words) = parse_closed_words(FILE_CLOSED_WORDS, &raw.closed_words)?;
        let proper_nouns = parse_word_set(FILE_PROPER_NOUNS, &raw.proper_nouns)?;
        let tri_roots = parse_word_set(FILE_ROOTS_TRI, &raw.roots_tri)?;
        let quad_roots = match &raw.roots_quad {
            Some(text) => parse_word_set(FILE_ROOTS_QUAD, text)?,
            None => HashSet::new(),
        };
        let patterns = parse_patterns(FILE_PATTERNS, &raw.patterns)?;
        let prefixes = parse_affixes(FILE_PREFIXES, &raw.prefixes, AffixPosition::Prefix)?;
        let suffixes = parse_affixes(FILE_SUFFIXES, &raw.suffixes, AffixPosition::Suffix)?;
        let third_class_verbs = parse_word_set(FILE_THIRD_CLASS_VERBS, &raw.third_class_verbs)?;
        let feminine_singulars = parse_word_set(FILE_FEMININE_SINGULAR, &raw.feminine_singular)?;
        let broken_plural_map = parse_pair_map(FILE_BROKEN_PLURALS, &raw.broken_plurals)?;
        let verb_lemma_map = parse_pair_map(FILE_VERB_LEMMA_MAP, &raw.verb_lemma_map)?;

        let mut pattern_index = HashMap::new();
        for (idx, pattern) in patterns.iter().enumerate() {
            if pattern_index.insert(pattern.name.clone(), idx).is_some() {
                return Err(LexiconError::Consistency(format!(
                    "duplicate pattern name `{}`",
                    pattern.name
                )));
            }
        }

        // Specificity order: more literal characters first, verbatim
        // templates before hollow-substitution ones, file order as the
        // final tie-breaker (sort is stable).
        let mut patterns_by_len: HashMap<usize, Vec<usize>> = HashMap::new();
        for (idx, pattern) in patterns.iter().enumerate() {
            patterns_by_len.entry(pattern.len()).or_default().push(idx);
        }
        for indices in patterns_by_len.values_mut() {
            indices.sort_by_key(|&i| {
                (
                    std::cmp::Reverse(patterns[i].literal_count()),
                    patterns[i].hollow_count(),
                )
            });
        }

        let bundle = LexiconBundle {
            groups,
            closed_words,
            proper_nouns,
            tri_roots,
            quad_roots,
            patterns,
            pattern_index,
            patterns_by_len,
            prefixes,
            suffixes,
            third_class_verbs,
            feminine_singulars,
            broken_plural_map,
            verb_lemma_map,
        };
        bundle.validate()?;
        Ok(bundle)
    }

    fn validate(&self) -> Result<(), LexiconError> {
        for (plural, singular) in &self.broken_plural_map {
            if singular.is_empty() || normalize(singular) != *singular {
                return Err(LexiconError::Consistency(format!(
                    "broken plural `{plural}` maps to a non-normalized singular `{singular}`"
                )));
            }
        }
        for (from, to) in &self.verb_lemma_map {
            let from_idx = self.pattern_index.get(from).ok_or_else(|| {
                LexiconError::Consistency(format!("lemma map source `{from}` is not a pattern"))
            })?;
            let to_idx = self.pattern_index.get(to).ok_or_else(|| {
                LexiconError::Consistency(format!("lemma map target `{to}` is not a pattern"))
            })?;
            let from_pattern = &self.patterns[*from_idx];
            let to_pattern = &self.patterns[*to_idx];
            if from_pattern.arity != to_pattern.arity {
                return Err(LexiconError::Consistency(format!(
                    "lemma map `{from}` -> `{to}` changes root arity"
                )));
            }
            if from_pattern.class == PatternClass::Noun {
                return Err(LexiconError::Consistency(format!(
                    "lemma map source `{from}` is a noun-only pattern"
                )));
            }
        }
        for entry in self.closed_words.values() {
            if !self.groups.iter().any(|g| g.name == entry.subcategory) {
                return Err(LexiconError::Consistency(format!(
                    "closed word `{}` uses undeclared subcategory `{}`",
                    entry.surface, entry.subcategory
                )));
            }
        }
        for affix in self.prefixes.iter().chain(self.suffixes.iter()) {
            if affix.features.definite && affix.class != AffixClass::NounOnly {
                return Err(LexiconError::Consistency(format!(
                    "definite affix `{}` must be noun-only",
                    affix.surface
                )));
            }
        }
        Ok(())
    }

    /// Exact-match lookup in the closed-word dictionary.
    pub fn lookup_closed(&self, surface: &str) -> Option<&ClosedWordEntry> {
        self.closed_words.get(surface)
    }

    /// Membership test in the proper-noun dictionary.
    pub fn lookup_proper(&self, surface: &str) -> bool {
        self.proper_nouns.contains(surface)
    }

    /// Check a candidate root against the root inventories.
    pub fn is_root(&self, root: &str) -> bool {
        match root.chars().count() {
            3 => self.tri_roots.contains(root),
            4 => self.quad_roots.contains(root),
            _ => false,
        }
    }

    pub fn tri_roots(&self) -> &HashSet<String> {
        &self.tri_roots
    }

    pub fn quad_roots(&self) -> &HashSet<String> {
        &self.quad_roots
    }

    pub fn groups(&self) -> &[ClosedGroup] {
        &self.groups
    }

    pub fn render_code(&self, subcategory: &str) -> Option<&str> {
        self.groups
            .iter()
            .find(|g| g.name == subcategory)
            .map(|g| g.render.as_str())
    }

    pub fn patterns(&self) -> &[PatternEntry] {
        &self.patterns
    }

    pub fn pattern_by_name(&self, name: &str) -> Option<&PatternEntry> {
        self.pattern_index.get(name).map(|&i| &self.patterns[i])
    }

    /// Pattern indices of the given template length in specificity order.
    pub fn patterns_of_len(&self, len: usize) -> &[usize] {
        self.patterns_by_len
            .get(&len)
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    pub fn pattern_at(&self, idx: usize) -> &PatternEntry {
        &self.patterns[idx]
    }

    pub fn prefixes(&self) -> &[AffixEntry] {
        &self.prefixes
    }

    pub fn suffixes(&self) -> &[AffixEntry] {
        &self.suffixes
    }

    pub fn is_third_class_verb(&self, stem: &str) -> bool {
        self.third_class_verbs.contains(stem)
    }

    pub fn is_feminine_singular_base(&self, base: &str) -> bool {
        self.feminine_singulars.contains(base)
    }

    pub fn broken_plural_singular(&self, stem: &str) -> Option<&str> {
        self.broken_plural_map.get(stem).map(String::as_str)
    }

    pub fn verb_lemma_target(&self, pattern_name: &str) -> Option<&PatternEntry> {
        self.verb_lemma_map
            .get(pattern_name)
            .and_then(|target| self.pattern_by_name(target))
    }

    pub fn counts(&self) -> BundleCounts {
        BundleCounts {
            closed_words: self.closed_words.len(),
            closed_groups: self.groups.len(),
            proper_nouns: self.proper_nouns.len(),
            tri_roots: self.tri_roots.len(),
            quad_roots: self.quad_roots.len(),
            patterns: self.patterns.len(),
            prefixes: self.prefixes.len(),
            suffixes: self.suffixes.len(),
            third_class_verbs: self.third_class_verbs.len(),
            feminine_singulars: self.feminine_singulars.len(),
            broken_plurals: self.broken_plural_map.len(),
            verb_lemma_mappings: self.verb_lemma_map.len(),
        }
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim_end_matches('\r')))
        .filter(|(_, line)| !line.trim().is_empty())
}

fn parse_error(file: &str, line: usize, message: impl Into<String>) -> LexiconError {
    LexiconError::Parse {
        file: file.to_string(),
        line,
        message: message.into(),
    }
}

fn parse_closed_words(
    file: &str,
    text: &str,
) -> Result<(Vec<ClosedGroup>, HashMap<String, ClosedWordEntry>), LexiconError> {
    let mut groups: Vec<ClosedGroup> = Vec::new();
    let mut words = HashMap::new();
    for (line_no, line) in content_lines(text) {
        if let Some(directive) = line.strip_prefix("#!") {
            let fields: Vec<&str> = directive.trim().split('\t').collect();
            match fields.as_slice() {
                ["group", name, render] => {
                    if groups.iter().any(|g| g.name == *name) {
                        return Err(parse_error(
                            file,
                            line_no,
                            format!("duplicate group declaration `{name}`"),
                        ));
                    }
                    groups.push(ClosedGroup {
                        name: name.to_string(),
                        render: render.to_string(),
                    });
                }
                _ => {
                    return Err(parse_error(file, line_no, "malformed `#!` directive"));
                }
            }
            continue;
        }
        if line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        let (surface, subcategory, hint) = match fields.as_slice() {
            [surface, subcategory] => (*surface, *subcategory, NextWordHint::None),
            [surface, subcategory, hint] => {
                let hint = match *hint {
                    "-" | "none" => NextWordHint::None,
                    "noun" => NextWordHint::Noun,
                    "verb" => NextWordHint::Verb,
                    other => {
                        return Err(parse_error(
                            file,
                            line_no,
                            format!("unknown next-word hint `{other}`"),
                        ))
                    }
                };
                (*surface, *subcategory, hint)
            }
            _ => {
                return Err(parse_error(
                    file,
                    line_no,
                    "expected 2 or 3 tab-separated fields",
                ))
            }
        };
        if normalize(surface) != surface {
            return Err(parse_error(
                file,
                line_no,
                format!("surface `{surface}` is not normalized"),
            ));
        }
        let entry = ClosedWordEntry {
            surface: surface.to_string(),
            subcategory: subcategory.to_string(),
            hint,
        };
        if words.insert(surface.to_string(), entry).is_some() {
            return Err(parse_error(
                file,
                line_no,
                format!("duplicate closed word `{surface}`"),
            ));
        }
    }
    Ok((groups, words))
}

fn parse_word_set(file: &str, text: &str) -> Result<HashSet<String>, LexiconError> {
    let mut set = HashSet::new();
    for (line_no, line) in content_lines(text) {
        if line.starts_with('#') {
            continue;
        }
        let word = line.trim();
        if word.contains('\t') {
            return Err(parse_error(file, line_no, "expected a single field"));
        }
        if normalize(word) != word {
            return Err(parse_error(
                file,
                line_no,
                format!("entry `{word}` is not normalized"),
            ));
        }
        if !set.insert(word.to_string()) {
            return Err(parse_error(
                file,
                line_no,
                format!("duplicate entry `{word}`"),
            ));
        }
    }
    Ok(set)
}

fn parse_pair_map(file: &str, text: &str) -> Result<HashMap<String, String>, LexiconError> {
    let mut map = HashMap::new();
    for (line_no, line) in content_lines(text) {
        if line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        let [key, value] = fields.as_slice() else {
            return Err(parse_error(
                file,
                line_no,
                "expected 2 tab-separated fields",
            ));
        };
        if map.insert(key.to_string(), value.to_string()).is_some() {
            return Err(parse_error(
                file,
                line_no,
                format!("duplicate entry `{key}`"),
            ));
        }
    }
    Ok(map)
}

/// Parse a template form: ASCII digits 1..4 are root positions (a
/// trailing `*` marks the hollow long-vowel realization), everything else
/// is a literal letter.
fn parse_form(file: &str, line_no: usize, form: &str) -> Result<Vec<Slot>, LexiconError> {
    let mut slots = Vec::new();
    let mut chars = form.chars().peekable();
    while let Some(ch) = chars.next() {
        match ch {
            '1'..='4' => {
                let position = ch as u8 - b'0';
                if chars.peek() == Some(&'*') {
                    chars.next();
                    slots.push(Slot::RootHollow(position));
                } else {
                    slots.push(Slot::Root(position));
                }
            }
            '*' => {
                return Err(parse_error(file, line_no, "`*` must follow a root digit"));
            }
            letter => slots.push(Slot::Literal(letter)),
        }
    }
    Ok(slots)
}

fn parse_patterns(file: &str, text: &str) -> Result<Vec<PatternEntry>, LexiconError> {
    let mut patterns = Vec::new();
    for (line_no, line) in content_lines(text) {
        if line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        let [name, display, form, class, tense] = fields.as_slice() else {
            return Err(parse_error(
                file,
                line_no,
                "expected 5 tab-separated fields",
            ));
        };
        let class = match *class {
            "verb" => PatternClass::Verb,
            "noun" => PatternClass::Noun,
            "general" => PatternClass::General,
            other => {
                return Err(parse_error(
                    file,
                    line_no,
                    format!("unknown pattern class `{other}`"),
                ))
            }
        };
        let tense = match *tense {
            "-" => None,
            "past" => Some(Tense::Past),
            "present" => Some(Tense::Present),
            other => {
                return Err(parse_error(
                    file,
                    line_no,
                    format!("unknown tense `{other}`"),
                ))
            }
        };
        let slots = parse_form(file, line_no, form)?;

        // Root positions must be 1..n in increasing order, each used once.
        let positions: Vec<u8> = slots
            .iter()
            .filter_map(|s| match s {
                Slot::Root(p) | Slot::RootHollow(p) => Some(*p),
                Slot::Literal(_) => None,
            })
            .collect();
        if positions.is_empty() {
            return Err(parse_error(file, line_no, "pattern has no root positions"));
        }
        for (i, &p) in positions.iter().enumerate() {
            if p as usize != i + 1 {
                return Err(parse_error(
                    file,
                    line_no,
                    format!("root positions must be 1..n in order, got {positions:?}"),
                ));
            }
        }
        patterns.push(PatternEntry {
            name: name.to_string(),
            display: display.to_string(),
            slots,
            class,
            tense,
            arity: positions.len() as u8,
        });
    }
    Ok(patterns)
}

fn parse_affixes(
    file: &str,
    text: &str,
    position: AffixPosition,
) -> Result<Vec<AffixEntry>, LexiconError> {
    let mut affixes = Vec::new();
    let mut seen = HashSet::new();
    for (line_no, line) in content_lines(text) {
        if line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        let (surface, class, features, min_stem) = match fields.as_slice() {
            [surface, class, features] => (*surface, *class, *features, 2usize),
            [surface, class, features, min_stem] => {
                let parsed = min_stem.parse::<usize>().map_err(|_| {
                    parse_error(file, line_no, format!("bad min-stem value `{min_stem}`"))
                })?;
                (*surface, *class, *features, parsed)
            }
            _ => {
                return Err(parse_error(
                    file,
                    line_no,
                    "expected 3 or 4 tab-separated fields",
                ))
            }
        };
        if surface.is_empty() {
            return Err(parse_error(file, line_no, "affix surface is empty"));
        }
        if !seen.insert(surface.to_string()) {
            return Err(parse_error(
                file,
                line_no,
                format!("duplicate affix `{surface}`"),
            ));
        }
        let class = match class {
            "noun" => AffixClass::NounOnly,
            "verb" => AffixClass::VerbOnly,
            "either" => AffixClass::Either,
            other => {
                return Err(parse_error(
                    file,
                    line_no,
                    format!("unknown affix class `{other}`"),
                ))
            }
        };
        let mut parsed = AffixFeatures::default();
        if features != "-" {
            for feature in features.split(',') {
                match feature {
                    "definite" => parsed.definite = true,
                    "pronoun" => parsed.pronoun = true,
                    "taa" => parsed.taa = true,
                    "restore" => parsed.restore = true,
                    "lam" => parsed.lam = true,
                    "past" => parsed.past = true,
                    "sg" => parsed.count = Some(Count::Singular),
                    "du" => parsed.count = Some(Count::Dual),
                    "pl" => parsed.count = Some(Count::Plural),
                    "masc" => parsed.gender = Some(Gender::Masculine),
                    "fem" => parsed.gender = Some(Gender::Feminine),
                    other => {
                        return Err(parse_error(
                            file,
                            line_no,
                            format!("unknown affix feature `{other}`"),
                        ))
                    }
                }
            }
        }
        affixes.push(AffixEntry {
            surface: surface.to_string(),
            position,
            class,
            features: parsed,
            min_stem,
        });
    }
    // Longest-first order is the order affix stripping consults them in;
    // ties keep file order.
    affixes.sort_by_key(|a| std::cmp::Reverse(a.surface.chars().count()));
    Ok(affixes)
}
