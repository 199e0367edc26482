use std::collections::HashMap;
use std::io::Cursor;

use birealize::drill::{
    check_answer, instantiate_pattern, instantiate_with, load_patterns, make_exercise, run_console, tokenize,
    Direction, DrillError, DrillPattern, PatternSet, Variation, MAX_LEVEL,
};
use birealize::features::{Language, Tense};
use birealize::syntax::{Interrogative, Modality, SentenceType};
use birealize::Engine;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn f02(set: &PatternSet) -> &DrillPattern {
    set.patterns().iter().find(|p| p.id == "F-02").unwrap()
}

fn pair(e: &Engine, p: &DrillPattern, chosen: &[usize], v: Variation) -> (String, String) {
    let inst = instantiate_with(p, chosen, v).unwrap();
    let en = e.realize(&inst.en);
    let fr = e.realize(&inst.fr);
    assert!(en.warnings.is_empty() && fr.warnings.is_empty());
    (en.text, fr.text)
}

fn counts(tokens: &[String]) -> HashMap<&str, usize> {
    let mut m = HashMap::new();
    for t in tokens {
        *m.entry(t.as_str()).or_default() += 1;
    }
    m
}

fn included(small: &[String], big: &[String]) -> bool {
    let big = counts(big);
    counts(small)
        .iter()
        .all(|(t, n)| big.get(t).copied().unwrap_or(0) >= *n)
}

#[test]
fn transcript_exercises() {
    let e = Engine::with_fixtures();
    let set = PatternSet::fixtures();
    let p = f02(&set);
    // singular, child, love, the, watermelon
    let choice = [0, 0, 1, 1, 1];
    let poss = Variation {
        tense: Tense::Present,
        typ: SentenceType {
            modality: Some(Modality::Possibility),
            ..Default::default()
        },
    };
    assert_eq!(
        pair(&e, p, &choice, poss),
        (
            "The child can love the watermelons.".into(),
            "L'enfant peut adorer les melons d'eau.".into()
        )
    );
    let yon = Variation {
        tense: Tense::Future,
        typ: SentenceType {
            int: Some(Interrogative::YesNo),
            ..Default::default()
        },
    };
    assert_eq!(
        pair(&e, p, &choice, yon),
        (
            "Will the child love the watermelons?".into(),
            "L'enfant adorera-t-il les melons d'eau?".into()
        )
    );
    let future = Variation {
        tense: Tense::Future,
        ..Default::default()
    };
    // singular, father, eat, a, watermelon
    assert_eq!(
        pair(&e, p, &[0, 1, 0, 0, 1], future),
        (
            "The father will eat watermelons.".into(),
            "Le père mangera des melons d'eau.".into()
        )
    );
}

#[test]
fn both_sides_get_the_same_variation() {
    let set = PatternSet::fixtures();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for p in set.patterns() {
        for _ in 0..50 {
            let inst = instantiate_pattern(p, &mut rng, MAX_LEVEL).unwrap();
            assert_eq!(inst.fr.options().t, inst.en.options().t);
            assert_eq!(inst.fr.options().typ, inst.en.options().typ);
            assert_eq!(inst.fr.options().typ, Some(inst.variation.typ));
        }
    }
}

#[test]
fn level_zero_is_affirmative() {
    let e = Engine::with_fixtures();
    let set = PatternSet::fixtures();
    for seed in 0..100 {
        let x = set.exercise(&e, Direction::FrEn, 0, seed).unwrap();
        assert!(x.variation.typ.is_affirmative() && x.variation.typ.modality.is_none());
        assert!(["F-02", "P-01"].contains(&x.pattern_id.as_str()));
    }
}

#[test]
fn distractors_come_from_unchosen_target_values() {
    let e = Engine::with_fixtures();
    let set = PatternSet::fixtures();
    let p = f02(&set);
    let allowed = [
        "enfant",
        "père",
        "frère",
        "soeur",
        "tante",
        "manger",
        "adorer",
        "détester",
        "un",
        "le",
        "pomme",
        "de",
        "terre",
        "melon",
        "eau",
        "avocat",
    ];
    for seed in 0..50 {
        let x = make_exercise(&e, p, Direction::EnFr, 0, 3, seed).unwrap();
        let expected = tokenize(&x.expected);
        assert_eq!(x.tokens.len(), expected.len() + 3);
        let mut rest = x.tokens.clone();
        for t in &expected {
            let i = rest.iter().position(|r| r == t).unwrap();
            rest.remove(i);
        }
        for d in &rest {
            assert!(allowed.contains(&d.as_str()), "{d} in {:?}", x.tokens);
        }
    }
}

#[test]
fn no_distractors_gives_a_permutation() {
    let e = Engine::with_fixtures();
    let set = PatternSet::fixtures();
    for p in set.patterns() {
        let x = make_exercise(&e, p, Direction::FrEn, 3, 0, 5).unwrap();
        let mut got = x.tokens.clone();
        let mut want = tokenize(&x.expected);
        got.sort();
        want.sort();
        assert_eq!(got, want);
    }
}

#[test]
fn answers_are_checked_after_normalization() {
    let e = Engine::with_fixtures();
    let set = PatternSet::fixtures();
    let x = set.exercise(&e, Direction::EnFr, 2, 3).unwrap();
    assert!(check_answer(&x, &x.expected).correct);
    assert!(check_answer(&x, &format!("  {}  ", x.expected.replace(' ', "   "))).correct);
    let wrong = check_answer(&x, "L'enfant peut adorer les melons d'eau ...");
    assert!(!wrong.correct);
    assert_eq!(wrong.expected, x.expected);
}

#[test]
fn every_pattern_round_trips() {
    let e = Engine::with_fixtures();
    let set = PatternSet::fixtures();
    assert!(set.patterns().len() >= 6);
    for p in set.patterns() {
        for level in p.level..=MAX_LEVEL {
            for d in Direction::ALL {
                for seed in 0..20 {
                    let x = make_exercise(&e, p, d, level, 3, seed).unwrap();
                    assert!(check_answer(&x, &x.expected).correct);
                    assert!(included(&tokenize(&x.expected), &x.tokens));
                    assert!(x.variation.level() <= level);
                }
            }
        }
    }
}

#[test]
fn shipped_set_covers_every_variation() {
    let e = Engine::with_fixtures();
    let set = PatternSet::fixtures();
    let (mut neg, mut yon, mut tag, mut pas) = (false, false, false, false);
    for seed in 0..200 {
        let x = set.exercise(&e, Direction::FrEn, 3, seed).unwrap();
        let t = x.variation.typ;
        neg |= t.neg;
        yon |= t.int == Some(Interrogative::YesNo);
        tag |= t.int == Some(Interrogative::Tag);
        pas |= t.pas;
    }
    assert!(neg && yon && tag && pas);
}

#[test]
fn seeded_sequences_repeat() {
    let e = Engine::with_fixtures();
    let set = PatternSet::fixtures();
    let run = || -> Vec<_> {
        set.sequence(&e, Direction::FrEn, 3, 7)
            .take(10)
            .map(Result::unwrap)
            .collect()
    };
    assert_eq!(run(), run());
}

#[test]
fn console_transcript() {
    let e = Engine::with_fixtures();
    let set = PatternSet::fixtures();
    let first = set.sequence(&e, Direction::EnFr, 2, 1).next().unwrap().unwrap();
    let input = format!("{}\nwrong answer\nend\n", first.expected);
    let mut out = Vec::new();
    let n = run_console(&e, &set, Direction::EnFr, 2, 1, Cursor::new(input), &mut out).unwrap();
    assert_eq!(n, 2);
    let text = String::from_utf8(out).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "Translate in French the sentences in English using some of the suggested words."
    );
    assert_eq!(lines[1], "Type \"end\" to exit.");
    assert_eq!(lines[2], first.source_text);
    assert_eq!(lines[3], first.tokens.join(", "));
    assert_eq!(lines[4], format!(">     {}:OK", first.expected));
    assert!(lines[7].ends_with(":KO"));
}

#[test]
fn malformed_pattern_files() {
    let arity = r#"{"patterns": [{"id": "X", "level": 0,
        "fr": {"params": ["a"], "tree": {"kind": "N", "lemma": "$a"}},
        "en": {"params": [], "tree": {"kind": "N", "lemma": "cat"}},
        "params": [[["chat", "cat"]]]}]}"#;
    assert!(matches!(load_patterns(arity), Err(DrillError::Load(m)) if m.contains("template has 0")));
    let list = r#"{"patterns": [{"id": "X", "level": 0,
        "fr": {"params": ["a"], "tree": {"kind": "N", "lemma": "$a"}},
        "en": {"params": ["a"], "tree": {"kind": "N", "lemma": "$a"}},
        "params": ["nope"]}]}"#;
    assert!(matches!(load_patterns(list), Err(DrillError::Load(m)) if m.contains("unknown list")));
    let fragment = r#"{"patterns": [{"id": "X", "level": 0,
        "fr": {"params": ["a"], "tree": {"param": "a"}},
        "en": {"params": ["a"], "tree": {"param": "a"}},
        "params": [[["@x", "@y"]]]}]}"#;
    assert!(matches!(load_patterns(fragment), Err(DrillError::Load(m)) if m.contains("fragment")));
}

#[test]
fn fragments_are_fresh_copies() {
    let set = PatternSet::fixtures();
    let p = f02(&set);
    let v = Variation::default();
    let a = instantiate_with(p, &[0, 0, 0, 0, 0], v).unwrap();
    let b = instantiate_with(p, &[0, 0, 0, 0, 0], v).unwrap();
    assert_eq!(a.tree(Language::Fr), b.tree(Language::Fr));
}

proptest! {
    #[test]
    fn tokens_rejoin_to_the_text_without_spaces(words in proptest::collection::vec("[a-zé'\\-,.?]{1,8}", 0..8)) {
        let text = words.join(" ");
        let joined: String = tokenize(&text).concat();
        prop_assert_eq!(joined, text.replace(' ', ""));
    }

    #[test]
    fn normalized_answers_are_accepted(seed in 0u64..500, pad in "[ \t]{0,3}") {
        let e = Engine::with_fixtures();
        let set = PatternSet::fixtures();
        let x = set.exercise(&e, Direction::FrEn, 3, seed).unwrap();
        let padded = format!("{pad}{}{pad}", x.expected);
        prop_assert!(check_answer(&x, &padded).correct);
    }
}
