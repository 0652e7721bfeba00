//! Word-internal morphology: affix stripping, templatic pattern matching,
//! root extraction and verification.

use crate::chars;
use crate::error::AnalysisError;
use crate::features::Tense;
use crate::lexicon::{AffixClass, AffixEntry, LexiconBundle, PatternClass, PatternEntry, Slot};

/// Single-letter conjunctions that may precede any word.
const CONJUNCTION_PROCLITICS: [char; 2] = ['و', 'ف'];
/// Single-letter prepositions that may precede a nominal.
const PREPOSITION_PROCLITICS: [char; 3] = ['ب', 'ك', 'ل'];

/// A candidate (proclitics, prefix, stem, suffix) decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segmentation {
    /// Stripped single-letter clitics, outermost first.
    pub proclitics: Vec<char>,
    pub prefix: Option<AffixEntry>,
    pub stem: String,
    pub suffix: Option<AffixEntry>,
}

impl Segmentation {
    /// The whole-word segmentation (no proclitic, no affixes).
    pub fn bare(stem: &str) -> Self {
        Segmentation {
            proclitics: Vec::new(),
            prefix: None,
            stem: stem.to_string(),
            suffix: None,
        }
    }

    /// Reassemble the original surface form.
    pub fn reconstruct(&self) -> String {
        let mut out = String::new();
        for &p in &self.proclitics {
            out.push(p);
        }
        if let Some(prefix) = &self.prefix {
            out.push_str(&prefix.surface);
        }
        out.push_str(&self.stem);
        if let Some(suffix) = &self.suffix {
            out.push_str(&suffix.surface);
        }
        out
    }

    pub fn has_affix(&self) -> bool {
        self.prefix.is_some() || self.suffix.is_some()
    }

    /// Signal carried by the affix classes alone.
    pub fn affix_signal(&self) -> AffixSignal {
        let classes = [
            self.prefix.as_ref().map(|a| a.class),
            self.suffix.as_ref().map(|a| a.class),
        ];
        if classes.iter().flatten().any(|c| *c == AffixClass::NounOnly) {
            AffixSignal::Noun
        } else if classes.iter().flatten().any(|c| *c == AffixClass::VerbOnly) {
            AffixSignal::Verb
        } else {
            AffixSignal::Ambiguous
        }
    }
}

/// What the affix classes say about the word category.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AffixSignal {
    Noun,
    Verb,
    Ambiguous,
}

/// A verified pattern match for a stem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternMatch {
    /// Unique pattern key (see `PatternEntry::name`).
    pub pattern_name: String,
    /// Cited pattern form for display.
    pub display: String,
    pub class: PatternClass,
    pub tense: Option<Tense>,
    /// Root consonants in order, verified against the root inventory.
    pub root: String,
    /// The matched stem in template form: instantiating the pattern with
    /// the root reproduces it exactly. It differs from the surface stem
    /// only when an initial hamzated alef matched the template's bare
    /// alef.
    pub stem: String,
}

/// Enumerate candidate segmentations, longest affix first.
///
/// Order: proclitic-stripped variants come before unstripped ones, longer
/// suffixes before shorter, suffixes before prefixes, and the untouched
/// whole-word segmentation is always last. Candidates keep at least
/// `min_stem` characters of stem and never combine a noun-only affix with
/// a verb-only one.
pub fn strip_affixes(surface: &str, bundle: &LexiconBundle) -> Vec<Segmentation> {
    let mut candidates = Vec::new();
    for proclitics in proclitic_options(surface) {
        let skip: usize = proclitics.len();
        let remainder: String = surface.chars().skip(skip).collect();
        enumerate_affixes(&proclitics, &remainder, bundle, &mut candidates);
    }
    candidates
}

fn proclitic_options(surface: &str) -> Vec<Vec<char>> {
    // The remainder must keep at least three characters, the shortest
    // form affix stripping can still work with.
    let chars: Vec<char> = surface.chars().collect();
    let mut options: Vec<Vec<char>> = Vec::new();
    if chars.len() > 4
        && CONJUNCTION_PROCLITICS.contains(&chars[0])
        && PREPOSITION_PROCLITICS.contains(&chars[1])
    {
        options.push(vec![chars[0], chars[1]]);
    }
    if chars.len() > 3
        && (CONJUNCTION_PROCLITICS.contains(&chars[0])
            || PREPOSITION_PROCLITICS.contains(&chars[0]))
    {
        options.push(vec![chars[0]]);
    }
    options.push(Vec::new());
    options
}

fn enumerate_affixes(
    proclitics: &[char],
    remainder: &str,
    bundle: &LexiconBundle,
    out: &mut Vec<Segmentation>,
) {
    let remainder_chars: Vec<char> = remainder.chars().collect();

    // Suffix options, longest first, then "no suffix". Affix tables are
    // already sorted longest-first.
    let mut suffix_options: Vec<Option<&AffixEntry>> = bundle
        .suffixes()
        .iter()
        .filter(|suffix| applies_suffix(&remainder_chars, suffix))
        .map(Some)
        .collect();
    suffix_options.push(None);

    for suffix in suffix_options {
        let stem_after_suffix: Vec<char> = match suffix {
            Some(s) => {
                let n = s.surface.chars().count();
                remainder_chars[..remainder_chars.len() - n].to_vec()
            }
            None => remainder_chars.clone(),
        };

        let mut prefix_options: Vec<Option<&AffixEntry>> = bundle
            .prefixes()
            .iter()
            .filter(|prefix| applies_prefix(&stem_after_suffix, prefix))
            .map(Some)
            .collect();
        prefix_options.push(None);

        for prefix in prefix_options {
            if let (Some(p), Some(s)) = (prefix, suffix) {
                let conflict = (p.class == AffixClass::NounOnly && s.class == AffixClass::VerbOnly)
                    || (p.class == AffixClass::VerbOnly && s.class == AffixClass::NounOnly);
                if conflict {
                    continue;
                }
            }
            let stem: String = match prefix {
                Some(p) => stem_after_suffix[p.surface.chars().count()..]
                    .iter()
                    .collect(),
                None => stem_after_suffix.iter().collect(),
            };
            if stem.is_empty() {
                continue;
            }
            out.push(Segmentation {
                proclitics: proclitics.to_vec(),
                prefix: prefix.cloned(),
                stem,
                suffix: suffix.cloned(),
            });
        }
    }
}

fn applies_suffix(word: &[char], suffix: &AffixEntry) -> bool {
    let s: Vec<char> = suffix.surface.chars().collect();
    word.len() >= s.len() + suffix.min_stem && word.ends_with(&s)
}

fn applies_prefix(word: &[char], prefix: &AffixEntry) -> bool {
    let p: Vec<char> = prefix.surface.chars().collect();
    word.len() >= p.len() + prefix.min_stem && word.starts_with(&p)
}

/// Match a stem against the pattern inventory.
///
/// Matches are returned in specificity order (more literal template
/// characters first) and every returned match carries a root that passed
/// [`verify_root`]. A template whose weak-letter alternatives resolve to
/// several verified roots yields one match per root.
pub fn match_pattern(stem: &str, bundle: &LexiconBundle) -> Vec<PatternMatch> {
    let stem_chars: Vec<char> = stem.chars().collect();
    let mut matches = Vec::new();
    for &idx in bundle.patterns_of_len(stem_chars.len()) {
        let pattern = bundle.pattern_at(idx);
        for root in match_one(&stem_chars, pattern, bundle) {
            let canonical =
                instantiate(pattern, &root).expect("matched root has the pattern's arity");
            matches.push(PatternMatch {
                pattern_name: pattern.name.clone(),
                display: pattern.display.clone(),
                class: pattern.class,
                tense: pattern.tense,
                root,
                stem: canonical,
            });
        }
    }
    matches
}

/// Try a single pattern; returns every verified root reading.
fn match_one(stem: &[char], pattern: &PatternEntry, bundle: &LexiconBundle) -> Vec<String> {
    debug_assert_eq!(stem.len(), pattern.slots.len());
    // Each root position collects its candidate letters; literal slots
    // must agree with the surface.
    let mut position_candidates: Vec<Vec<char>> = Vec::with_capacity(pattern.arity as usize);
    for (index, (slot, &surface)) in pattern.slots.iter().zip(stem).enumerate() {
        match slot {
            Slot::Literal(expected) => {
                // A hamzated alef may stand in for the template's bare
                // alef, but only word-initially (where hamza spelling
                // varies in practice).
                let ok = surface == *expected
                    || (index == 0 && *expected == chars::ALEF && chars::is_hamzated_alef(surface));
                if !ok {
                    return Vec::new();
                }
            }
            Slot::Root(_) => {
                if !chars::is_arabic_letter(surface) {
                    return Vec::new();
                }
                position_candidates.push(root_letter_candidates(surface));
            }
            Slot::RootHollow(_) => {
                if !chars::is_arabic_letter(surface) {
                    return Vec::new();
                }
                if surface == chars::ALEF {
                    // The long vowel hides the weak radical.
                    position_candidates.push(vec!['و', 'ي', 'ا']);
                } else {
                    position_candidates.push(root_letter_candidates(surface));
                }
            }
        }
    }
    verified_roots(&position_candidates, bundle)
}

/// Alternatives a surface letter may stand for as a root consonant. The
/// surface letter itself is always tried first; hamza carriers also try
/// the plain hamzated alef and the bare hamza.
fn root_letter_candidates(surface: char) -> Vec<char> {
    let mut candidates = vec![surface];
    if chars::is_hamza_carrier(surface) {
        for alt in ['أ', 'ء'] {
            if !candidates.contains(&alt) {
                candidates.push(alt);
            }
        }
    }
    candidates
}

fn verified_roots(position_candidates: &[Vec<char>], bundle: &LexiconBundle) -> Vec<String> {
    fn recurse(
        position_candidates: &[Vec<char>],
        acc: &mut String,
        bundle: &LexiconBundle,
        out: &mut Vec<String>,
    ) {
        if position_candidates.is_empty() {
            if bundle.is_root(acc) {
                out.push(acc.clone());
            }
            return;
        }
        for &letter in &position_candidates[0] {
            acc.push(letter);
            recurse(&position_candidates[1..], acc, bundle, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    let mut acc = String::new();
    recurse(position_candidates, &mut acc, bundle, &mut out);
    out
}

/// Check a candidate root against the loaded root inventories.
pub fn verify_root(root: &str, bundle: &LexiconBundle) -> bool {
    bundle.is_root(root)
}

/// Fill a pattern's root slots with the given root consonants.
pub fn instantiate(pattern: &PatternEntry, root: &str) -> Result<String, AnalysisError> {
    let root_chars: Vec<char> = root.chars().collect();
    if root_chars.len() != pattern.arity as usize {
        return Err(AnalysisError::ArityMismatch {
            pattern: pattern.name.clone(),
            root: root.to_string(),
            expected: pattern.arity as usize,
            got: root_chars.len(),
        });
    }
    let mut out = String::new();
    for slot in &pattern.slots {
        match slot {
            Slot::Literal(ch) => out.push(*ch),
            Slot::Root(p) => out.push(root_chars[*p as usize - 1]),
            Slot::RootHollow(p) => {
                let letter = root_chars[*p as usize - 1];
                out.push(if chars::is_weak(letter) {
                    chars::ALEF
                } else {
                    letter
                });
            }
        }
    }
    Ok(out)
}
