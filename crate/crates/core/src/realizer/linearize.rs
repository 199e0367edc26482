use crate::engine::Engine;
use crate::features::Language;
use crate::lexicon::Pos;
use crate::morphology::{self, format_date, number_to_words, personal_pronoun, pronoun_features, MorphError};
use crate::syntax::{NodeKind, PhraseKind, TerminalKind, TerminalValue};

use super::agreement::{conjuncts, np_head};
use super::postprocess::{Token, TokenKind};
use super::{Annotated, Warning};

pub const PRENOMINAL_FR: [&str; 12] = [
    "petit", "grand", "beau", "bon", "jeune", "joli", "gros", "vieux", "nouveau", "mauvais", "premier",
    "dernier",
];

/// Token sequence of an annotated tree, without sentence markers.
pub fn linearize(engine: &Engine, node: &Annotated, warnings: &mut Vec<Warning>) -> Vec<Token> {
    let mut out = Vec::new();
    emit(engine, node, warnings, &mut out);
    out
}

fn emit(engine: &Engine, node: &Annotated, warnings: &mut Vec<Warning>, out: &mut Vec<Token>) {
    if let Some(ba) = node.options.ba {
        out.push(Token::new(ba.open(), node.lang, TokenKind::OpenBracket));
    }
    match node.kind {
        NodeKind::Terminal(kind) => terminal(engine, node, kind, warnings, out),
        NodeKind::Phrase(PhraseKind::NP) => {
            for i in np_order(node) {
                emit(engine, &node.children[i], warnings, out);
            }
        }
        NodeKind::Phrase(PhraseKind::CP) => coordination(engine, node, warnings, out),
        NodeKind::Phrase(PhraseKind::S) | NodeKind::Phrase(PhraseKind::SP) => {
            let subject = super::agreement::subject_index(node);
            for (i, child) in node.children.iter().enumerate() {
                if Some(i) == subject {
                    if let Some(clause) = &node.clause {
                        out.extend(clause.front.iter().cloned());
                        if clause.drop_subject {
                            continue;
                        }
                    }
                }
                emit(engine, child, warnings, out);
            }
            if let Some(clause) = &node.clause {
                if subject.is_none() {
                    out.extend(clause.front.iter().cloned());
                }
                out.extend(clause.tail.iter().cloned());
            }
        }
        NodeKind::Phrase(_) => {
            for child in &node.children {
                emit(engine, child, warnings, out);
            }
        }
    }
    if let Some(ba) = node.options.ba {
        out.push(Token::new(ba.close(), node.lang, TokenKind::CloseBracket));
    }
}

fn is_adjective(node: &Annotated) -> bool {
    matches!(
        node.kind,
        NodeKind::Terminal(TerminalKind::A) | NodeKind::Phrase(PhraseKind::AP)
    )
}

fn prenominal(node: &Annotated) -> bool {
    match node.lang {
        Language::En => true,
        Language::Fr => {
            let lemma = match node.kind {
                NodeKind::Phrase(PhraseKind::AP) => node
                    .children
                    .iter()
                    .find(|c| c.kind == NodeKind::Terminal(TerminalKind::A))
                    .and_then(Annotated::lemma),
                _ => node.lemma(),
            };
            lemma.is_some_and(|l| PRENOMINAL_FR.contains(&l))
        }
    }
}

/// Child order of an NP: determiners and other pre-head material, prenominal
/// adjectives, head, postnominal adjectives, complements.
fn np_order(np: &Annotated) -> Vec<usize> {
    let Some(head) = np_head(np) else {
        return (0..np.children.len()).collect();
    };
    let kids = &np.children;
    let mut order: Vec<usize> = (0..head).filter(|&i| !is_adjective(&kids[i])).collect();
    order.extend((0..kids.len()).filter(|&i| is_adjective(&kids[i]) && prenominal(&kids[i])));
    order.push(head);
    order.extend((0..kids.len()).filter(|&i| is_adjective(&kids[i]) && !prenominal(&kids[i])));
    order.extend((head + 1..kids.len()).filter(|&i| !is_adjective(&kids[i])));
    order
}

fn coordination(engine: &Engine, cp: &Annotated, warnings: &mut Vec<Warning>, out: &mut Vec<Token>) {
    let conj = cp
        .children
        .iter()
        .find(|c| c.kind == NodeKind::Terminal(TerminalKind::C));
    let items: Vec<&Annotated> = conjuncts(cp).map(|(_, c)| c).collect();
    let n = items.len();
    for (i, item) in items.iter().enumerate() {
        if i > 0 {
            if i + 1 == n {
                match conj {
                    Some(c) => emit(engine, c, warnings, out),
                    None => out.push(Token::punct(",", cp.lang)),
                }
            } else {
                out.push(Token::punct(",", cp.lang));
            }
        }
        emit(engine, item, warnings, out);
    }
}

fn or_verbatim(
    result: Result<String, MorphError>,
    lang: Language,
    lemma: &str,
    warnings: &mut Vec<Warning>,
) -> String {
    result.unwrap_or_else(|err| {
        warnings.push(Warning::from_morph(&err, lang, lemma));
        lemma.to_string()
    })
}

fn terminal(
    engine: &Engine,
    node: &Annotated,
    kind: TerminalKind,
    warnings: &mut Vec<Warning>,
    out: &mut Vec<Token>,
) {
    let lang = node.lang;
    let lex = engine.lexicon(lang);
    match (&node.value, kind) {
        (Some(TerminalValue::Number(value)), _) => {
            let spelled = if node.options.nat == Some(true) {
                number_to_words(*value, node.gender, lang).ok()
            } else {
                None
            };
            match spelled {
                Some(ws) => out.extend(ws.into_iter().map(|w| Token::word(w, lang))),
                None => out.push(Token::word(value.to_string(), lang)),
            }
        }
        (Some(TerminalValue::Date(ts)), _) => {
            let opts = node.options.d_opt.unwrap_or_default();
            for w in format_date(ts, &opts, lang) {
                let kind = if w == "," {
                    TokenKind::Punct
                } else {
                    TokenKind::Verbatim
                };
                out.push(Token::new(w, lang, kind));
            }
        }
        (Some(TerminalValue::Text(text)), _) => {
            out.push(Token::new(text.clone(), lang, TokenKind::Verbatim));
        }
        (Some(TerminalValue::Lemma(lemma)), kind) => {
            if let Some(chain) = &node.chain {
                out.extend(chain.iter().cloned());
                return;
            }
            let text = match kind {
                TerminalKind::N => or_verbatim(
                    morphology::inflect_noun(lex, lemma, node.number),
                    lang,
                    lemma,
                    warnings,
                ),
                TerminalKind::A => or_verbatim(
                    morphology::inflect_adjective(lex, lemma, node.gender, node.number),
                    lang,
                    lemma,
                    warnings,
                ),
                TerminalKind::D => or_verbatim(
                    morphology::inflect_determiner(lex, lemma, node.gender, node.number),
                    lang,
                    lemma,
                    warnings,
                ),
                TerminalKind::Pro => match pronoun_features(lemma, lang) {
                    Some(_) => personal_pronoun(node.person, node.number, node.gender, lang).to_string(),
                    None => or_verbatim(
                        morphology::form(lex, lemma, Pos::Pro, node.number.code()),
                        lang,
                        lemma,
                        warnings,
                    ),
                },
                TerminalKind::V => {
                    let tense = node.tense;
                    match morphology::conjugate(lex, lemma, tense, node.person, node.number) {
                        Ok(ws) => {
                            out.extend(ws.into_iter().map(|w| Token::word(w, lang)));
                            return;
                        }
                        Err(err) => {
                            warnings.push(Warning::from_morph(&err, lang, lemma));
                            lemma.clone()
                        }
                    }
                }
                _ => {
                    let pos = kind.pos().expect("lemma-carrying kind");
                    or_verbatim(morphology::form(lex, lemma, pos, "b"), lang, lemma, warnings)
                }
            };
            out.push(Token::word(text, lang));
        }
        (None, _) => {}
    }
}
