#![allow(dead_code)]

use birealize::features::{Gender, Language};
use birealize::report::{Event, Participant, ReportSpec};
use chrono::{Duration, NaiveDate, NaiveDateTime};

pub fn at(y: i32, m: u32, d: u32, h: u32) -> NaiveDateTime {
    NaiveDate::from_ymd_opt(y, m, d)
        .unwrap()
        .and_hms_opt(h, 0, 0)
        .unwrap()
}

pub fn alice_eve_bob() -> Vec<Participant> {
    vec![
        Participant::new("Alice", Gender::Feminine),
        Participant::new("Eve", Gender::Feminine),
        Participant::new("Bob", Gender::Masculine),
    ]
}

/// Yesterday with one participant, today with two, tomorrow with three.
pub fn three_days(today: NaiveDateTime) -> Vec<ReportSpec> {
    let people = alice_eve_bob();
    (1..=3)
        .map(|i| ReportSpec {
            event: Event {
                en: "assembly".into(),
                fr: "réunion".into(),
            },
            participants: people[..i].to_vec(),
            date: today + Duration::days(i as i64 - 2),
            today,
        })
        .collect()
}

pub const WORD_TABLE_LINES: [(Language, &str); 6] = [
    (Language::En, "Alice (one person) was present at an assembly on Monday, September 25, 2023 at 5 p.m."),
    (Language::Fr, "Alice (une personne) fut présente à une réunion le lundi 25 septembre 2023 à 17 h."),
    (Language::En, "Alice and Eve (two persons) are present at an assembly on Tuesday, September 26, 2023 at 5 p.m."),
    (Language::Fr, "Alice et Eve (deux personnes) sont présentes à une réunion le mardi 26 septembre 2023 à 17 h."),
    (Language::En, "Alice, Eve and Bob (three persons) will be present at an assembly on Wednesday, September 27, 2023 at 5 p.m."),
    (Language::Fr, "Alice, Eve et Bob (trois personnes) seront présents à une réunion le mercredi 27 septembre 2023 à 17 h."),
];

pub const INTERFACE_LINES: [(Language, &str); 6] = [
    (Language::En, "Alice (one person) attended the assembly on Thursday, September 28, 2023 at 2 p.m."),
    (Language::Fr, "Alice (un individu) fut présente à la réunion le jeudi 28 septembre 2023 à 14 h."),
    (Language::En, "Alice and Eve (two persons) attend the assembly on Friday, September 29, 2023 at 2 p.m."),
    (Language::Fr, "Alice et Eve (deux individus) sont présentes à la réunion le vendredi 29 septembre 2023 à 14 h."),
    (Language::En, "Alice, Eve and Bob (three persons) will attend the assembly on Saturday, September 30, 2023 at 2 p.m."),
    (Language::Fr, "Alice, Eve et Bob (trois individus) seront présents à la réunion le samedi 30 septembre 2023 à 14 h."),
];

pub const NOUN_REPORT_LINES: [&str; 2] = [
    "A mother and a girl (2 persons) were present at a birthday on Tuesday, May 30, 2023.",
    "A grandfather, a father and a boy (3 persons) will be present at an assembly on Saturday, December 30, 2023.",
];

pub mod trees {
    use birealize::features::Language;
    use birealize::syntax::{Constituent, PhraseKind, TerminalKind, TerminalValue};
    use chrono::{NaiveDate, NaiveDateTime};
    use proptest::prelude::*;
    use serde_json::{json, Value};

    fn lang() -> impl Strategy<Value = Language> {
        prop_oneof![Just(Language::En), Just(Language::Fr)]
    }

    fn option() -> impl Strategy<Value = (&'static str, Value)> {
        prop_oneof![
            prop_oneof![Just("s"), Just("p")].prop_map(|v| ("n", json!(v))),
            prop_oneof![Just("m"), Just("f")].prop_map(|v| ("g", json!(v))),
            (1i64..=3).prop_map(|v| ("pe", json!(v))),
            prop_oneof![Just("p"), Just("ps"), Just("f")].prop_map(|v| ("t", json!(v))),
            (any::<bool>(), any::<bool>(), 0usize..3, any::<bool>()).prop_map(|(neg, pas, int, m)| {
                let mut t = json!({"neg": neg, "pas": pas});
                if int > 0 {
                    t["int"] = json!(["yon", "tag"][int - 1]);
                }
                if m {
                    t["mod"] = json!("poss");
                }
                ("typ", t)
            }),
            Just(("ba", json!("("))),
            proptest::sample::subsequence(vec!["year", "month", "date", "day", "hour", "minute"], 0..6)
                .prop_map(|off| {
                    let m: serde_json::Map<String, Value> =
                        off.into_iter().map(|k| (k.to_string(), json!(false))).collect();
                    ("dOpt", Value::Object(m))
                }),
            any::<bool>().prop_map(|v| ("nat", json!(v))),
        ]
    }

    fn with_options(mut c: Constituent, opts: Vec<(&'static str, Value)>) -> Constituent {
        for (k, v) in opts {
            c.set_option(k, &v).unwrap();
        }
        c
    }

    fn date() -> impl Strategy<Value = NaiveDateTime> {
        (1900i32..2100, 1u32..=12, 1u32..=28, 0u32..24, 0u32..60, 0u32..60).prop_map(|(y, m, d, h, mi, s)| {
            NaiveDate::from_ymd_opt(y, m, d)
                .unwrap()
                .and_hms_opt(h, mi, s)
                .unwrap()
        })
    }

    fn terminal() -> impl Strategy<Value = Constituent> {
        let lemma_kinds: Vec<TerminalKind> = TerminalKind::ALL
            .iter()
            .copied()
            .filter(|k| k.pos().is_some())
            .collect();
        let value = prop_oneof![
            (proptest::sample::select(lemma_kinds), "[a-zéèà]{1,8}")
                .prop_map(|(k, s)| (k, TerminalValue::Lemma(s))),
            any::<i64>().prop_map(|n| (TerminalKind::NO, TerminalValue::Number(n))),
            date().prop_map(|d| (TerminalKind::DT, TerminalValue::Date(d))),
            ".{0,12}".prop_map(|s| (TerminalKind::Q, TerminalValue::Text(s))),
        ];
        (value, lang(), proptest::collection::vec(option(), 0..3))
            .prop_map(|((k, v), l, opts)| with_options(Constituent::terminal(k, v, l).unwrap(), opts))
    }

    /// Random well-formed trees, up to four levels deep.
    pub fn arb_tree() -> impl Strategy<Value = Constituent> {
        terminal().prop_recursive(4, 40, 5, |inner| {
            (
                proptest::sample::select(PhraseKind::ALL.to_vec()),
                proptest::collection::vec(inner, 0..5),
                lang(),
                proptest::collection::vec(option(), 0..3),
            )
                .prop_map(|(k, kids, l, opts)| with_options(Constituent::phrase(k, kids, l), opts))
        })
    }
}

pub mod sentences {
    use birealize::features::{Language, Number, Tense};
    use birealize::syntax::{Builder, Constituent, Interrogative, Modality, SentenceType};
    use proptest::prelude::*;

    pub struct Words {
        pub dets: &'static [&'static str],
        pub nouns: &'static [&'static str],
        pub adjs: &'static [&'static str],
        pub verbs: &'static [&'static str],
        pub preps: &'static [&'static str],
    }

    pub fn words(lang: Language) -> Words {
        match lang {
            Language::En => Words {
                dets: &["the", "a"],
                nouns: &[
                    "cat", "apple", "uncle", "girl", "house", "eye", "father", "idea", "uncle",
                ],
                adjs: &["small", "green", "happy", "old"],
                verbs: &["eat", "love", "see", "find", "carry", "watch"],
                preps: &["on", "at", "in", "for"],
            },
            Language::Fr => Words {
                dets: &["le", "un"],
                nouns: &[
                    "chat", "enfant", "homme", "eau", "maison", "histoire", "arbre", "oncle", "habitude",
                ],
                adjs: &["petit", "vert", "heureux", "beau"],
                verbs: &["manger", "aimer", "voir", "adorer", "écouter", "habiter"],
                preps: &["à", "de", "sur", "dans"],
            },
        }
    }

    fn pick(xs: &'static [&'static str]) -> impl Strategy<Value = &'static str> {
        proptest::sample::select(xs)
    }

    fn np(b: Builder) -> impl Strategy<Value = Constituent> {
        let w = words(b.lang());
        (
            pick(w.dets),
            pick(w.nouns),
            proptest::option::of(pick(w.adjs)),
            any::<bool>(),
        )
            .prop_map(move |(d, n, a, plural)| {
                let mut kids = vec![b.d(d), b.n(n)];
                kids.extend(a.map(|a| b.a(a)));
                let np = b.np(kids);
                if plural {
                    np.n(Number::Plural)
                } else {
                    np
                }
            })
    }

    pub fn typ() -> impl Strategy<Value = SentenceType> {
        (any::<bool>(), 0usize..3, any::<bool>(), any::<bool>()).prop_map(|(neg, int, poss, pas)| {
            SentenceType {
                neg,
                int: [None, Some(Interrogative::YesNo), Some(Interrogative::Tag)][int],
                modality: poss.then_some(Modality::Possibility),
                pas,
            }
        })
    }

    pub fn tense() -> impl Strategy<Value = Tense> {
        prop_oneof![Just(Tense::Present), Just(Tense::Past), Just(Tense::Future)]
    }

    /// S(NP, VP(V, NP, PP?)) from lexicon words, with any sentence type.
    pub fn arb_sentence(lang: Language) -> impl Strategy<Value = Constituent> {
        let b = Builder::new(lang);
        let w = words(lang);
        (
            np(b),
            pick(w.verbs),
            np(b),
            proptest::option::of((pick(w.preps), np(b))),
            tense(),
            typ(),
        )
            .prop_map(move |(subj, v, obj, pp, t, typ)| {
                let mut vp = vec![b.v(v), obj];
                vp.extend(pp.map(|(p, np)| b.pp([b.p(p), np])));
                b.s([subj, b.vp(vp)]).t(t).typ(typ)
            })
    }
}

/// Trees of the reference sentences, grouped by criterion, with the
/// expected realizations.
pub mod golden {
    use birealize::features::{Language, Number, Tense};
    use birealize::syntax::{Arg, Builder, Constituent, Interrogative, Modality, SentenceType};

    pub type Case = (Constituent, &'static str);

    fn cat(b: Builder, d: &str, n: &str, a: &str) -> Constituent {
        b.np([b.d(d), b.n(n), b.a(a)])
    }

    pub fn cat_en() -> Vec<Case> {
        let b = Builder::new(Language::En);
        let s = b.s([
            cat(b, "the", "cat", "small"),
            b.vp([
                b.v("jump").t(Tense::Past),
                b.pp([b.p("on"), cat(b, "the", "mat", "green")]),
            ]),
        ]);
        vec![(s, "The small cat jumped on the green mat.")]
    }

    pub fn cat_fr() -> Vec<Case> {
        let b = Builder::new(Language::Fr);
        let s = b.s([
            cat(b, "le", "chat", "petit"),
            b.vp([
                b.v("sauter").t(Tense::Past),
                b.pp([b.p("sur"), cat(b, "le", "tapis", "vert")]),
            ]),
        ]);
        vec![(s, "Le petit chat sauta sur le tapis vert.")]
    }

    fn mixed() -> (Constituent, Constituent) {
        let (en, fr) = (Builder::new(Language::En), Builder::new(Language::Fr));
        let subj = cat(en, "the", "cat", "small").n(Number::Plural);
        let verb = fr.vp([
            fr.v("sauter"),
            fr.pp([fr.p("sur"), cat(fr, "le", "tapis", "vert")]),
        ]);
        (subj, verb)
    }

    pub fn cat_mixed() -> Vec<Case> {
        let (subj, verb) = mixed();
        let fr = Builder::new(Language::Fr);
        vec![(fr.s([subj, verb]), "The small cats sautent sur le tapis vert.")]
    }

    pub fn cat_added() -> Vec<Case> {
        let (subj, mut verb) = mixed();
        let en = Builder::new(Language::En);
        verb.add(
            en.pp([en.p("over"), en.np([en.d("a"), en.n("fence")]).n(Number::Plural)]),
            None,
        )
        .unwrap();
        vec![(
            en.s([subj, verb]),
            "The small cats sautent sur le tapis vert over fences.",
        )]
    }

    fn coordination(lang: Language, expected: [&'static str; 3]) -> Vec<Case> {
        let b = Builder::new(lang);
        let (det, conj, persons, copula, adj) = match lang {
            Language::En => ("the", "and", ["mother", "daughter", "father"], "be", "happy"),
            Language::Fr => ("le", "et", ["mère", "fille", "père"], "être", "heureux"),
        };
        (1..=3)
            .zip(expected)
            .map(|(i, want)| {
                let nps: Vec<_> = persons[..i].iter().map(|p| b.np([b.d(det), b.n(p)])).collect();
                let s = b.s([
                    b.cp(vec![b.c(conj).into(), nps.into()] as Vec<Arg>),
                    b.vp([b.v(copula), b.a(adj)]),
                ]);
                (s, want)
            })
            .collect()
    }

    pub fn coordination_en() -> Vec<Case> {
        coordination(
            Language::En,
            [
                "The mother is happy.",
                "The mother and the daughter are happy.",
                "The mother, the daughter and the father are happy.",
            ],
        )
    }

    pub fn coordination_fr() -> Vec<Case> {
        coordination(
            Language::Fr,
            [
                "La mère est heureuse.",
                "La mère et la fille sont heureuses.",
                "La mère, la fille et le père sont heureux.",
            ],
        )
    }

    /// S(NP(D the, N subject), VP(V, NP(D, object))) with a plural object.
    pub fn drill_sentence(
        lang: Language,
        n: Number,
        subject: &str,
        verb: &str,
        det: &str,
        object: Constituent,
    ) -> Constituent {
        let b = Builder::new(lang);
        let the = if lang == Language::En { "the" } else { "le" };
        b.s([
            b.np([b.d(the), b.n(subject).n(n)]),
            b.vp([b.v(verb), b.np([b.d(det), object.n(Number::Plural)])]),
        ])
    }

    pub fn melon() -> Constituent {
        let b = Builder::new(Language::Fr);
        b.np([b.n("melon"), b.pp([b.p("de"), b.n("eau")])])
    }

    pub fn typ(neg: bool, int: Option<Interrogative>, modality: Option<Modality>) -> SentenceType {
        SentenceType {
            neg,
            int,
            modality,
            pas: false,
        }
    }

    pub fn drill_lines() -> Vec<Case> {
        let en = Builder::new(Language::En);
        let s = |lang, n, subj, verb, det, obj| drill_sentence(lang, n, subj, verb, det, obj);
        use Language::{En, Fr};
        use Number::{Plural, Singular};
        vec![
            (
                s(En, Plural, "child", "love", "a", en.n("avocado")),
                "The children love avocados.",
            ),
            (
                s(En, Singular, "mother", "cook", "the", en.n("apple"))
                    .t(Tense::Future)
                    .typ(typ(true, None, None)),
                "The mother will not cook the apples.",
            ),
            (
                s(En, Singular, "uncle", "eat", "the", en.n("apple"))
                    .t(Tense::Past)
                    .typ(typ(true, Some(Interrogative::Tag), None)),
                "The uncle did not eat the apples, did he?",
            ),
            (
                s(Fr, Singular, "enfant", "manger", "le", melon()).typ(typ(
                    false,
                    None,
                    Some(Modality::Possibility),
                )),
                "L'enfant peut manger les melons d'eau.",
            ),
            (
                s(Fr, Singular, "enfant", "adorer", "le", melon())
                    .t(Tense::Future)
                    .typ(typ(false, Some(Interrogative::YesNo), None)),
                "L'enfant adorera-t-il les melons d'eau?",
            ),
            (
                s(Fr, Singular, "père", "manger", "un", melon()).t(Tense::Future),
                "Le père mangera des melons d'eau.",
            ),
        ]
    }
}
