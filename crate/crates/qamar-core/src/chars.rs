//! Arabic character classes used throughout the analyzer.

/// Tatweel (kashida), the elongation character.
pub const TATWEEL: char = '\u{0640}';

/// Taa marbuta, the feminine ending.
pub const TAA_MARBUTA: char = 'ة';

/// Bare alef.
pub const ALEF: char = 'ا';

/// Check whether a character is a short-vowel diacritic or related
/// vocalization mark (tanween, fatha, damma, kasra, shadda, sukun,
/// superscript alef).
pub fn is_diacritic(ch: char) -> bool {
    matches!(ch,
        '\u{064B}'..='\u{0652}' // fathatan..sukun
        | '\u{0653}'..='\u{0655}' // maddah, hamza above/below combining
        | '\u{0670}' // superscript alef
    )
}

/// Check whether a character is an Arabic letter (base inventory, not
/// diacritics or punctuation).
pub fn is_arabic_letter(ch: char) -> bool {
    matches!(ch, '\u{0621}'..='\u{064A}') && !is_diacritic(ch)
}

/// Alef variants carrying a hamza or madda.
pub fn is_hamzated_alef(ch: char) -> bool {
    matches!(ch, 'أ' | 'إ' | 'آ')
}

/// Hamza carriers that may stand in for a hamzated radical.
pub fn is_hamza_carrier(ch: char) -> bool {
    matches!(ch, 'أ' | 'إ' | 'آ' | 'ؤ' | 'ئ' | 'ء')
}

/// Decimal digits, including the Arabic-Indic range.
pub fn is_digit(ch: char) -> bool {
    ch.is_ascii_digit() || matches!(ch, '\u{0660}'..='\u{0669}')
}

/// Punctuation recognised as a separate token (Latin and Arabic marks).
pub fn is_punctuation(ch: char) -> bool {
    matches!(
        ch,
        '.' | ','
            | ';'
            | ':'
            | '!'
            | '?'
            | '('
            | ')'
            | '['
            | ']'
            | '{'
            | '}'
            | '"'
            | '\''
            | '«'
            | '»'
            | '،'
            | '؛'
            | '؟'
            | '…'
            | '-'
            | '–'
            | '—'
            | '/'
    )
}

/// The weak letters that surface as a long vowel inside hollow stems.
pub fn is_weak(ch: char) -> bool {
    matches!(ch, 'ا' | 'و' | 'ي')
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diacritics_cover_tanween_and_shadda() {
        for ch in ['\u{064B}', '\u{064E}', '\u{0651}', '\u{0652}', '\u{0670}'] {
            assert!(is_diacritic(ch), "{ch:?} should be a diacritic");
        }
        assert!(!is_diacritic('ا'));
        assert!(!is_diacritic(TATWEEL));
    }

    #[test]
    fn letters_exclude_digits_and_punct() {
        assert!(is_arabic_letter('ك'));
        assert!(is_arabic_letter('ء'));
        assert!(!is_arabic_letter('1'));
        assert!(!is_arabic_letter('،'));
    }

    #[test]
    fn arabic_indic_digits_recognised() {
        assert!(is_digit('٣'));
        assert!(is_digit('7'));
        assert!(!is_digit('ب'));
    }
}
