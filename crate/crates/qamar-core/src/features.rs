//! Morpho-syntactic feature values attached to analyses.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Count {
    Singular,
    Dual,
    Plural,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Gender {
    Masculine,
    Feminine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Tense {
    Past,
    Present,
    Imperative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Voice {
    Active,
    Passive,
}

/// Feature bundle for one analysis. Nominal features (definite, count,
/// gender) and verbal features (tense, voice) are mutually exclusive;
/// use the constructors to keep them that way.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Features {
    pub definite: bool,
    pub count: Option<Count>,
    pub gender: Option<Gender>,
    pub tense: Option<Tense>,
    pub voice: Option<Voice>,
}

impl Features {
    /// Features for a particle, number, punctuation, or unknown token.
    pub fn none() -> Self {
        Features::default()
    }

    /// Features for a noun, adjective, or proper noun.
    pub fn nominal(definite: bool, count: Option<Count>, gender: Option<Gender>) -> Self {
        Features {
            definite,
            count,
            gender,
            tense: None,
            voice: None,
        }
    }

    /// Features for a verb.
    pub fn verbal(tense: Tense) -> Self {
        Features {
            definite: false,
            count: None,
            gender: None,
            tense: Some(tense),
            voice: Some(Voice::Active),
        }
    }

    /// True when no nominal or verbal feature is set.
    pub fn is_empty(&self) -> bool {
        !self.definite
            && self.count.is_none()
            && self.gender.is_none()
            && self.tense.is_none()
            && self.voice.is_none()
    }

    /// Render as a compact diagnostic string, `-` when empty.
    pub fn summary(&self) -> String {
        let mut parts = Vec::new();
        if self.definite {
            parts.push("def".to_string());
        }
        if let Some(count) = self.count {
            parts.push(
                match count {
                    Count::Singular => "sg",
                    Count::Dual => "du",
                    Count::Plural => "pl",
                }
                .to_string(),
            );
        }
        if let Some(gender) = self.gender {
            parts.push(
                match gender {
                    Gender::Masculine => "masc",
                    Gender::Feminine => "fem",
                }
                .to_string(),
            );
        }
        if let Some(tense) = self.tense {
            parts.push(
                match tense {
                    Tense::Past => "past",
                    Tense::Present => "pres",
                    Tense::Imperative => "imp",
                }
                .to_string(),
            );
        }
        if let Some(voice) = self.voice {
            parts.push(
                match voice {
                    Voice::Active => "act",
                    Voice::Passive => "pass",
                }
                .to_string(),
            );
        }
        if parts.is_empty() {
            "-".to_string()
        } else {
            parts.join(",")
        }
    }
}
