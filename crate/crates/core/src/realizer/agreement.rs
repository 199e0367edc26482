use crate::engine::Engine;
use crate::features::{Gender, Language, Number, Person, Tense};
use crate::lexicon::Pos;
use crate::morphology::pronoun_features;
use crate::syntax::{NodeKind, PhraseKind, TerminalKind, TerminalValue};

use super::Annotated;

/// Resolved features of a nominal constituent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Agr {
    pub number: Number,
    pub gender: Gender,
    pub person: Person,
    /// gender stated by the lexicon, an option or a pronoun
    pub gender_known: bool,
}

impl Default for Agr {
    fn default() -> Self {
        Agr {
            number: Number::Singular,
            gender: Gender::Masculine,
            person: Person::Third,
            gender_known: false,
        }
    }
}

fn is_t(node: &Annotated, kind: TerminalKind) -> bool {
    node.kind == NodeKind::Terminal(kind)
}

fn is_p(node: &Annotated, kind: PhraseKind) -> bool {
    node.kind == NodeKind::Phrase(kind)
}

pub(crate) fn is_nominal(node: &Annotated) -> bool {
    is_t(node, TerminalKind::N)
        || is_t(node, TerminalKind::Pro)
        || is_p(node, PhraseKind::NP)
        || is_p(node, PhraseKind::CP)
}

/// Head of an NP: its first noun, pronoun, NP or CP child.
pub(crate) fn np_head(np: &Annotated) -> Option<usize> {
    np.children.iter().position(is_nominal)
}

pub(crate) fn conjuncts(cp: &Annotated) -> impl Iterator<Item = (usize, &Annotated)> {
    cp.children
        .iter()
        .enumerate()
        .filter(|(_, c)| !is_t(c, TerminalKind::C))
}

fn number_of_value(value: i64, lang: Language) -> Number {
    let plural = match lang {
        Language::En => value != 1,
        Language::Fr => value.abs() >= 2,
    };
    if plural {
        Number::Plural
    } else {
        Number::Singular
    }
}

/// Number stated by the node itself or below it, without inheritance.
fn explicit_number(node: &Annotated) -> Option<Number> {
    if let Some(n) = node.options.n {
        return Some(n);
    }
    match node.kind {
        NodeKind::Terminal(TerminalKind::Pro) => node
            .lemma()
            .and_then(|l| pronoun_features(l, node.lang))
            .map(|(_, n, _)| n),
        NodeKind::Terminal(TerminalKind::NO) => match node.value {
            Some(TerminalValue::Number(v)) => Some(number_of_value(v, node.lang)),
            _ => None,
        },
        NodeKind::Phrase(PhraseKind::NP) => np_head(node)
            .and_then(|h| explicit_number(&node.children[h]))
            .or_else(|| {
                node.children
                    .iter()
                    .find(|c| is_t(c, TerminalKind::NO))
                    .and_then(explicit_number)
            }),
        NodeKind::Phrase(PhraseKind::CP) => {
            let cs: Vec<_> = conjuncts(node).collect();
            match cs.len() {
                0 => None,
                1 => explicit_number(cs[0].1),
                _ => Some(Number::Plural),
            }
        }
        _ => None,
    }
}

/// Gender stated by the node itself or its head; `None` when unknown.
fn explicit_gender(engine: &Engine, node: &Annotated) -> Option<Gender> {
    if let Some(g) = node.options.g {
        return Some(g);
    }
    match node.kind {
        NodeKind::Terminal(TerminalKind::N) => node
            .lemma()
            .and_then(|l| engine.lexicon(node.lang).lookup(l, Pos::N).ok().and_then(|r| r.g)),
        NodeKind::Terminal(TerminalKind::Pro) => node.lemma().and_then(|l| {
            pronoun_features(l, node.lang)
                .and_then(|(_, _, g)| g)
                .or_else(|| {
                    engine
                        .lexicon(node.lang)
                        .lookup(l, Pos::Pro)
                        .ok()
                        .and_then(|r| r.g)
                })
        }),
        NodeKind::Phrase(PhraseKind::NP) => {
            np_head(node).and_then(|h| explicit_gender(engine, &node.children[h]))
        }
        NodeKind::Phrase(PhraseKind::CP) => {
            let gs: Vec<_> = conjuncts(node).map(|(_, c)| explicit_gender(engine, c)).collect();
            if gs.is_empty() {
                None
            } else if gs.iter().all(|g| *g == Some(Gender::Feminine)) {
                Some(Gender::Feminine)
            } else if gs.iter().all(Option::is_some) {
                Some(Gender::Masculine)
            } else {
                gs.iter().flatten().next().map(|_| Gender::Masculine)
            }
        }
        _ => None,
    }
}

fn explicit_person(node: &Annotated) -> Option<Person> {
    if let Some(p) = node.options.pe {
        return Some(p);
    }
    match node.kind {
        NodeKind::Terminal(TerminalKind::Pro) => node
            .lemma()
            .and_then(|l| pronoun_features(l, node.lang))
            .map(|(p, _, _)| p),
        NodeKind::Phrase(PhraseKind::NP) => np_head(node).and_then(|h| explicit_person(&node.children[h])),
        NodeKind::Phrase(PhraseKind::CP) => conjuncts(node)
            .filter_map(|(_, c)| explicit_person(c))
            .min_by_key(|p| p.index()),
        _ => None,
    }
}

/// Features of a nominal node, `inherited` filling what it does not state.
pub fn resolve(engine: &Engine, node: &Annotated, inherited: Option<Agr>) -> Agr {
    let base = inherited.unwrap_or_default();
    let gender = explicit_gender(engine, node);
    Agr {
        number: explicit_number(node).unwrap_or(base.number),
        gender: gender.unwrap_or(base.gender),
        person: explicit_person(node).unwrap_or(base.person),
        gender_known: gender.is_some() || (inherited.is_some() && base.gender_known),
    }
}

fn set_agr(node: &mut Annotated, agr: Agr) {
    node.number = agr.number;
    node.gender = agr.gender;
    node.person = agr.person;
    node.gender_known = agr.gender_known;
}

/// Imposes gender and number on a modifier, its own options winning.
fn impose(node: &mut Annotated, agr: Agr) {
    node.number = node.options.n.unwrap_or(agr.number);
    node.gender = node.options.g.unwrap_or(agr.gender);
    node.person = node.options.pe.unwrap_or(agr.person);
    node.gender_known = agr.gender_known;
    let inner = Agr {
        number: node.number,
        gender: node.gender,
        ..agr
    };
    match node.kind {
        NodeKind::Phrase(PhraseKind::AP) | NodeKind::Phrase(PhraseKind::CP) => {
            for child in node.children.iter_mut() {
                if is_t(child, TerminalKind::A) || is_p(child, PhraseKind::AP) || is_p(child, PhraseKind::CP)
                {
                    impose(child, inner);
                }
            }
        }
        _ => {}
    }
}

fn is_adjectival(node: &Annotated) -> bool {
    is_t(node, TerminalKind::A)
        || is_p(node, PhraseKind::AP)
        || (is_p(node, PhraseKind::CP)
            && conjuncts(node).next().is_some()
            && conjuncts(node).all(|(_, c)| is_adjectival(c)))
}

/// Index of the subject: the first nominal child before the first VP.
pub(crate) fn subject_index(s: &Annotated) -> Option<usize> {
    let vp = s.children.iter().position(|c| is_p(c, PhraseKind::VP))?;
    s.children[..vp].iter().position(is_nominal)
}

/// Index of the finite verb of a VP: its first V child.
pub(crate) fn main_verb_index(vp: &Annotated) -> Option<usize> {
    vp.children.iter().position(|c| is_t(c, TerminalKind::V))
}

/// Annotates every node with gender, number, person and tense.
pub fn propagate_agreement(engine: &Engine, tree: &mut Annotated) {
    agree(engine, tree, None, None);
}

fn agree(engine: &Engine, node: &mut Annotated, inherited: Option<Agr>, tense: Option<Tense>) {
    match node.kind {
        NodeKind::Terminal(_) => {
            let agr = resolve(engine, node, inherited);
            set_agr(node, agr);
            node.tense = node.options.t.or(tense).unwrap_or_default();
        }
        NodeKind::Phrase(PhraseKind::NP) => {
            let agr = resolve(engine, node, inherited);
            set_agr(node, agr);
            let head = np_head(node);
            for (i, child) in node.children.iter_mut().enumerate() {
                if Some(i) == head {
                    agree(engine, child, Some(agr), tense);
                    impose_head(child, agr);
                } else if matches!(
                    child.kind,
                    NodeKind::Terminal(TerminalKind::D)
                        | NodeKind::Terminal(TerminalKind::A)
                        | NodeKind::Terminal(TerminalKind::NO)
                        | NodeKind::Phrase(PhraseKind::AP)
                ) {
                    impose(child, agr);
                } else {
                    agree(engine, child, None, tense);
                }
            }
        }
        NodeKind::Phrase(PhraseKind::CP) => {
            let agr = resolve(engine, node, inherited);
            set_agr(node, agr);
            let adjectival = is_adjectival(node);
            for child in node.children.iter_mut() {
                if adjectival && !is_t(child, TerminalKind::C) {
                    impose(child, agr);
                } else {
                    agree(engine, child, None, tense);
                }
            }
        }
        NodeKind::Phrase(PhraseKind::S) | NodeKind::Phrase(PhraseKind::SP) => {
            let tense = node.options.t.or(tense);
            node.tense = tense.unwrap_or_default();
            let subject = subject_index(node);
            let mut subject_agr = None;
            if let Some(i) = subject {
                agree(engine, &mut node.children[i], None, tense);
                let s = &node.children[i];
                subject_agr = Some(Agr {
                    number: s.number,
                    gender: s.gender,
                    person: s.person,
                    gender_known: s.gender_known,
                });
            }
            for (i, child) in node.children.iter_mut().enumerate() {
                if Some(i) == subject {
                    continue;
                }
                if is_p(child, PhraseKind::VP) {
                    agree_vp(engine, child, subject_agr.unwrap_or_default(), tense);
                } else {
                    agree(engine, child, None, tense);
                }
            }
        }
        NodeKind::Phrase(PhraseKind::VP) => {
            agree_vp(engine, node, inherited.unwrap_or_default(), tense);
        }
        NodeKind::Phrase(_) => {
            node.tense = node.options.t.or(tense).unwrap_or_default();
            for child in node.children.iter_mut() {
                agree(engine, child, None, tense);
            }
        }
    }
}

fn impose_head(head: &mut Annotated, agr: Agr) {
    if is_t(head, TerminalKind::N) {
        head.number = head.options.n.unwrap_or(agr.number);
        head.gender = head.options.g.unwrap_or(agr.gender);
    }
}

fn agree_vp(engine: &Engine, vp: &mut Annotated, subject: Agr, tense: Option<Tense>) {
    let tense = vp.options.t.or(tense);
    vp.tense = tense.unwrap_or_default();
    set_agr(vp, subject);
    let verb = main_verb_index(vp);
    for (i, child) in vp.children.iter_mut().enumerate() {
        if Some(i) == verb {
            set_agr(child, subject);
            child.person = child.options.pe.unwrap_or(subject.person);
            child.number = child.options.n.unwrap_or(subject.number);
            child.tense = child.options.t.or(tense).unwrap_or_default();
        } else if is_adjectival(child) {
            impose(child, subject);
        } else if is_p(child, PhraseKind::VP) {
            agree_vp(engine, child, subject, tense);
        } else {
            agree(engine, child, None, tense);
        }
    }
}
