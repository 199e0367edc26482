//! Translation drills built from parallel sentence patterns.

mod console;
mod pattern;

pub use console::run_console;
pub use pattern::{load_patterns, DrillPattern, Pair, SlotValue, PATTERNS_JSON};

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::engine::Engine;
use crate::features::{Language, Tense};
use crate::realizer::Warning;
use crate::syntax::{Constituent, Interrogative, Modality, Param, SentenceType};

pub const DEFAULT_DISTRACTORS: usize = 3;
pub const MAX_LEVEL: u8 = 3;

#[derive(Debug, Error)]
pub enum DrillError {
    #[error("pattern file: {0}")]
    Load(String),
    #[error("pattern {id}: {message}")]
    Instantiate { id: String, message: String },
    #[error("pattern {id} realized with warnings: {warnings:?}")]
    Realization { id: String, warnings: Vec<Warning> },
    #[error("no pattern available up to level {0}")]
    NoPattern(u8),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    #[serde(rename = "fr-en")]
    FrEn,
    #[serde(rename = "en-fr")]
    EnFr,
}

impl Direction {
    pub const ALL: [Direction; 2] = [Direction::FrEn, Direction::EnFr];

    pub fn new(source: Language, target: Language) -> Option<Direction> {
        match (source, target) {
            (Language::Fr, Language::En) => Some(Direction::FrEn),
            (Language::En, Language::Fr) => Some(Direction::EnFr),
            _ => None,
        }
    }

    pub fn source(self) -> Language {
        match self {
            Direction::FrEn => Language::Fr,
            Direction::EnFr => Language::En,
        }
    }

    pub fn target(self) -> Language {
        self.source().other()
    }

    pub fn code(self) -> &'static str {
        match self {
            Direction::FrEn => "fr-en",
            Direction::EnFr => "en-fr",
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for Direction {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Direction::ALL
            .into_iter()
            .find(|d| d.code() == s)
            .ok_or_else(|| format!("unknown direction {s:?}, expected fr-en or en-fr"))
    }
}

/// Tense and sentence type applied identically to both sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Variation {
    pub tense: Tense,
    pub typ: SentenceType,
}

impl Variation {
    /// Least level at which this variation can be drawn.
    pub fn level(&self) -> u8 {
        let t = &self.typ;
        let count = [t.neg, t.modality.is_some(), t.int.is_some(), t.pas]
            .iter()
            .filter(|b| **b)
            .count();
        if t.pas || count > 1 {
            3
        } else if t.int.is_some() {
            2
        } else if count == 1 {
            1
        } else {
            0
        }
    }

    pub fn apply(&self, tree: Constituent) -> Constituent {
        tree.t(self.tense).typ(self.typ)
    }
}

/// Draws a variation. Level 0 keeps affirmative sentences; 1 adds negation
/// or possibility; 2 adds yes/no and tag questions; 3 combines them and
/// adds the passive.
pub fn random_variation<R: Rng + ?Sized>(rng: &mut R, level_cap: u8, passive: bool) -> Variation {
    let tense = [Tense::Present, Tense::Past, Tense::Future][rng.gen_range(0..3)];
    let mut typ = SentenceType::default();
    let neg = SentenceType {
        neg: true,
        ..Default::default()
    };
    let poss = SentenceType {
        modality: Some(Modality::Possibility),
        ..Default::default()
    };
    let question = |int| SentenceType {
        int: Some(int),
        ..Default::default()
    };
    match level_cap {
        0 => {}
        1 | 2 => {
            let mut single = vec![SentenceType::default(), neg, poss];
            if level_cap == 2 {
                single.push(question(Interrogative::YesNo));
                single.push(question(Interrogative::Tag));
            }
            typ = single[rng.gen_range(0..single.len())];
        }
        _ => {
            typ.neg = rng.gen_bool(0.5);
            typ.modality = rng.gen_bool(1.0 / 3.0).then_some(Modality::Possibility);
            typ.int = [None, Some(Interrogative::YesNo), Some(Interrogative::Tag)][rng.gen_range(0..3)];
            typ.pas = passive && rng.gen_bool(0.5);
        }
    }
    Variation { tense, typ }
}

/// Both trees of one instantiation and the choices behind them.
#[derive(Debug, Clone)]
pub struct Instance {
    pub fr: Constituent,
    pub en: Constituent,
    pub variation: Variation,
    /// index of the chosen pair in each slot
    pub chosen: Vec<usize>,
}

impl Instance {
    pub fn tree(&self, lang: Language) -> &Constituent {
        match lang {
            Language::Fr => &self.fr,
            Language::En => &self.en,
        }
    }
}

pub fn instantiate_pattern<R: Rng + ?Sized>(
    p: &DrillPattern,
    rng: &mut R,
    level_cap: u8,
) -> Result<Instance, DrillError> {
    let chosen: Vec<usize> = p.slots.iter().map(|s| rng.gen_range(0..s.len())).collect();
    let variation = random_variation(rng, level_cap, p.passive);
    instantiate_with(p, &chosen, variation)
}

/// Instantiation with explicit pair indices, one per slot.
pub fn instantiate_with(
    p: &DrillPattern,
    chosen: &[usize],
    variation: Variation,
) -> Result<Instance, DrillError> {
    let err = |message: String| DrillError::Instantiate {
        id: p.id.clone(),
        message,
    };
    if chosen.len() != p.slots.len() || chosen.iter().zip(&p.slots).any(|(&i, s)| i >= s.len()) {
        return Err(err(format!("choices {chosen:?} do not fit the slots")));
    }
    let build = |lang| {
        let args: Vec<Param> = p
            .slots
            .iter()
            .zip(chosen)
            .map(|(slot, &i)| p.param(slot[i].side(lang), lang))
            .collect();
        p.template(lang)
            .instantiate(&args)
            .map(|t| variation.apply(t))
            .map_err(|e| err(e.to_string()))
    };
    Ok(Instance {
        fr: build(Language::Fr)?,
        en: build(Language::En)?,
        variation,
        chosen: chosen.to_vec(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Exercise {
    pub pattern_id: String,
    pub direction: Direction,
    pub source_text: String,
    /// target tokens shuffled with distractors
    pub tokens: Vec<String>,
    pub expected: String,
    pub variation: Variation,
    pub seed: u64,
}

/// One exercise from one pattern, fully determined by `seed`.
pub fn make_exercise(
    engine: &Engine,
    p: &DrillPattern,
    direction: Direction,
    level_cap: u8,
    distractors: usize,
    seed: u64,
) -> Result<Exercise, DrillError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let inst = instantiate_pattern(p, &mut rng, level_cap)?;
    let (src, tgt) = (direction.source(), direction.target());
    let realize = |lang| {
        let r = engine.realize(inst.tree(lang));
        if r.warnings.is_empty() {
            Ok(r.text)
        } else {
            Err(DrillError::Realization {
                id: p.id.clone(),
                warnings: r.warnings,
            })
        }
    };
    let source_text = realize(src)?;
    let expected = realize(tgt)?;

    let mut pool: Vec<String> = Vec::new();
    for (slot, (pairs, &chosen)) in p.slots.iter().zip(&inst.chosen).enumerate() {
        for (i, pair) in pairs.iter().enumerate() {
            if i == chosen {
                continue;
            }
            for lemma in p.lemmas(slot, pair.side(tgt), tgt) {
                for tok in tokenize(&lemma) {
                    if !pool.contains(&tok) {
                        pool.push(tok);
                    }
                }
            }
        }
    }
    let mut tokens = tokenize(&expected);
    tokens.extend(pool.choose_multiple(&mut rng, distractors).cloned());
    tokens.shuffle(&mut rng);
    Ok(Exercise {
        pattern_id: p.id.clone(),
        direction,
        source_text,
        tokens,
        expected,
        variation: inst.variation,
        seed,
    })
}

/// Splits on whitespace, then isolates apostrophes, hyphens and punctuation.
pub fn tokenize(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    for word in text.split_whitespace() {
        let mut cur = String::new();
        for ch in word.chars() {
            if matches!(
                ch,
                '\'' | '’' | '-' | ',' | '.' | '?' | '!' | ';' | ':' | '(' | ')'
            ) {
                if !cur.is_empty() {
                    out.push(std::mem::take(&mut cur));
                }
                out.push(ch.to_string());
            } else {
                cur.push(ch);
            }
        }
        if !cur.is_empty() {
            out.push(cur);
        }
    }
    out
}

pub fn normalize(answer: &str) -> String {
    answer.split_whitespace().collect::<Vec<_>>().join(" ")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub correct: bool,
    pub expected: String,
    pub normalized: String,
}

pub fn check_answer(e: &Exercise, answer: &str) -> Verdict {
    let normalized = normalize(answer);
    Verdict {
        correct: normalized == normalize(&e.expected),
        expected: e.expected.clone(),
        normalized,
    }
}

/// The shipped pattern set.
#[derive(Debug, Clone)]
pub struct PatternSet {
    patterns: Vec<DrillPattern>,
}

impl PatternSet {
    pub fn fixtures() -> Self {
        PatternSet::from_json(PATTERNS_JSON).expect("shipped patterns are valid")
    }

    pub fn from_json(json: &str) -> Result<Self, DrillError> {
        Ok(PatternSet {
            patterns: load_patterns(json)?,
        })
    }

    pub fn patterns(&self) -> &[DrillPattern] {
        &self.patterns
    }

    pub fn eligible(&self, level_cap: u8) -> impl Iterator<Item = &DrillPattern> {
        self.patterns.iter().filter(move |p| p.level <= level_cap)
    }

    /// Picks a pattern and builds an exercise, both from `seed`.
    pub fn exercise(
        &self,
        engine: &Engine,
        direction: Direction,
        level_cap: u8,
        seed: u64,
    ) -> Result<Exercise, DrillError> {
        let eligible: Vec<&DrillPattern> = self.eligible(level_cap).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = eligible
            .choose(&mut rng)
            .ok_or(DrillError::NoPattern(level_cap))?;
        make_exercise(
            engine,
            p,
            direction,
            level_cap,
            DEFAULT_DISTRACTORS,
            rng.next_u64(),
        )
        .map(|e| Exercise { seed, ..e })
    }

    /// Endless exercise sequence derived from one seed.
    pub fn sequence<'a>(
        &'a self,
        engine: &'a Engine,
        direction: Direction,
        level_cap: u8,
        seed: u64,
    ) -> impl Iterator<Item = Result<Exercise, DrillError>> + 'a {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        std::iter::from_fn(move || Some(self.exercise(engine, direction, level_cap, rng.next_u64())))
    }
}
