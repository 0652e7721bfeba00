//! Text normalization and tokenization.
//!
//! Written Arabic usually omits the short vowels, and our resources are
//! stored undiacritized, so the first step of every analysis strips
//! diacritics and tatweel. Alef variants are preserved by default; IR
//! consumers that want aggressive conflation can opt into folding.

use crate::chars;

/// Options controlling [`normalize`].
#[derive(Debug, Clone, Copy, Default)]
pub struct NormalizeOptions {
    /// Fold hamzated alef variants (أ إ آ) to bare alef. Off by default:
    /// lemma forms distinguish hamzas.
    pub fold_alef: bool,
}

/// Strip short-vowel diacritics and tatweel, preserving everything else.
pub fn normalize(text: &str) -> String {
    normalize_with(text, NormalizeOptions::default())
}

/// [`normalize`] with explicit options.
pub fn normalize_with(text: &str, options: NormalizeOptions) -> String {
    let mut out = String::with_capacity(text.len());
    for ch in text.chars() {
        if chars::is_diacritic(ch) || ch == chars::TATWEEL {
            continue;
        }
        if options.fold_alef && chars::is_hamzated_alef(ch) {
            out.push(chars::ALEF);
            continue;
        }
        out.push(ch);
    }
    out
}

/// Coarse token classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TokenKind {
    Word,
    Number,
    Punctuation,
}

/// A single token with its source span.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    /// Normalized form used by the analyzer.
    pub surface: String,
    /// The token exactly as it appeared in the source text.
    pub original: String,
    /// Character offsets (start, end) into the source text.
    pub span: (usize, usize),
    pub kind: TokenKind,
}

impl Token {
    fn new(original: &str, span: (usize, usize), options: NormalizeOptions) -> Self {
        let kind = classify(original);
        let surface = match kind {
            TokenKind::Word => normalize_with(original, options),
            _ => original.to_string(),
        };
        Token {
            surface,
            original: original.to_string(),
            span,
            kind,
        }
    }
}

fn classify(token: &str) -> TokenKind {
    let first = token.chars().next().expect("token is non-empty");
    if chars::is_punctuation(first) {
        TokenKind::Punctuation
    } else if chars::is_digit(first) {
        // Year markers such as "2003م" stay one numeric token.
        TokenKind::Number
    } else {
        TokenKind::Word
    }
}

/// Split text into word / number / punctuation tokens.
///
/// Tokens partition the non-whitespace content: every punctuation mark is
/// its own token and words are maximal runs of letters and digits.
/// Normalization is applied per token, so spans always index the text as
/// given.
pub fn tokenize(text: &str) -> Vec<Token> {
    tokenize_with(text, NormalizeOptions::default())
}

/// [`tokenize`] with explicit normalization options.
pub fn tokenize_with(text: &str, options: NormalizeOptions) -> Vec<Token> {
    let mut tokens = Vec::new();
    let mut run_start: Option<usize> = None;
    let mut buf = String::new();

    let flush =
        |tokens: &mut Vec<Token>, buf: &mut String, start: &mut Option<usize>, end: usize| {
            if let Some(s) = start.take() {
                if !buf.is_empty() {
                    let token = Token::new(buf, (s, end), options);
                    // A run of bare diacritics normalizes to nothing; it
                    // carries no content worth a token.
                    if !token.surface.is_empty() {
                        tokens.push(token);
                    }
                    buf.clear();
                }
            }
        };

    for (pos, ch) in text.chars().enumerate() {
        if ch.is_whitespace() {
            flush(&mut tokens, &mut buf, &mut run_start, pos);
        } else if chars::is_punctuation(ch) {
            flush(&mut tokens, &mut buf, &mut run_start, pos);
            tokens.push(Token::new(&ch.to_string(), (pos, pos + 1), options));
        } else {
            if run_start.is_none() {
                run_start = Some(pos);
            }
            buf.push(ch);
        }
    }
    let total = text.chars().count();
    flush(&mut tokens, &mut buf, &mut run_start, total);
    tokens
}
