//! Whole-output invariants checked over the bundled passages.

use qamar_core::{Analyzer, Category, LemmaMethod, TokenKind};

fn corpus_analyses(analyzer: &Analyzer) -> Vec<qamar_core::Analysis> {
    let mut analyses = Vec::new();
    for name in ["education_passage.txt", "technology_sentence.txt"] {
        let path = format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
        let text = std::fs::read_to_string(path).unwrap();
        analyses.extend(analyzer.analyze(&text));
    }
    analyses
}

#[test]
fn noun_lemmas_are_bare_singulars() {
    let analyzer = Analyzer::bundled();
    for a in corpus_analyses(&analyzer) {
        if !matches!(a.category, Category::Noun | Category::Adjective) {
            continue;
        }
        assert!(
            !a.lemma.starts_with("ال"),
            "{}: lemma {} keeps the article",
            a.token.surface,
            a.lemma
        );
        for ending in ["ون", "ين", "ات"] {
            assert!(
                !a.lemma.ends_with(ending),
                "{}: lemma {} keeps a sound-plural ending",
                a.token.surface,
                a.lemma
            );
        }
    }
}

#[test]
fn broken_plural_lemmas_are_bit_exact() {
    let analyzer = Analyzer::bundled();
    let bundle = analyzer.bundle();
    let mut hits = 0;
    for a in corpus_analyses(&analyzer) {
        if a.lemma_method != LemmaMethod::BrokenPluralDict {
            continue;
        }
        let stored = bundle
            .broken_plural_singular(a.stem())
            .expect("dictionary hit has a stored singular");
        assert_eq!(a.lemma, stored, "{}", a.token.surface);
        hits += 1;
    }
    assert!(hits >= 10, "the passages exercise the dictionary ({hits} hits)");
}

#[test]
fn closed_words_always_tag_as_particles() {
    let analyzer = Analyzer::bundled();
    let bundle = analyzer.bundle();
    let mut seen = 0;
    for a in corpus_analyses(&analyzer) {
        if a.token.kind != TokenKind::Word {
            continue;
        }
        if let Some(entry) = bundle.lookup_closed(&a.token.surface) {
            assert_eq!(
                a.category,
                Category::Particle(entry.subcategory.clone()),
                "{}",
                a.token.surface
            );
            seen += 1;
        }
    }
    assert!(seen >= 20, "the passages exercise the dictionary ({seen} hits)");
}

#[test]
fn trivial_categories_keep_their_surface_as_lemma() {
    let analyzer = Analyzer::bundled();
    for a in corpus_analyses(&analyzer) {
        if matches!(
            a.category,
            Category::Particle(_) | Category::Number | Category::Punct | Category::Unknown
        ) {
            assert_eq!(a.lemma, a.token.surface, "{}", a.token.surface);
        }
    }
}

#[test]
fn adjectives_follow_agreeing_nominals() {
    let analyzer = Analyzer::bundled();
    let analyses = corpus_analyses(&analyzer);
    let words: Vec<_> = analyses
        .iter()
        .filter(|a| a.token.kind == TokenKind::Word)
        .collect();
    for (i, a) in words.iter().enumerate() {
        if a.category != Category::Adjective {
            continue;
        }
        assert!(i > 0, "an adjective needs a preceding word");
        let prev = words[i - 1];
        assert!(
            matches!(prev.category, Category::Noun | Category::Adjective),
            "{} follows {:?}",
            a.token.surface,
            prev.category
        );
        assert_eq!(
            prev.features.definite, a.features.definite,
            "{} definiteness",
            a.token.surface
        );
        assert!(!a.has_proclitic(), "{}", a.token.surface);
    }
}
