use crate::engine::Engine;
use crate::features::{Language, Number, Person, Tense};
use crate::lexicon::Pos;
use crate::morphology::{self, personal_pronoun, pronoun_features, pronoun_for};
use crate::syntax::{
    Interrogative, Modality, NodeKind, PhraseKind, SentenceType, TerminalKind, TerminalValue,
};

use super::agreement::{is_nominal, main_verb_index, propagate_agreement, subject_index};
use super::postprocess::{Token, TokenKind};
use super::{Annotated, Warning, WarningCode};

/// Surface material a clause adds around its subject and after its last child.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ClauseForm {
    pub front: Vec<Token>,
    pub tail: Vec<Token>,
    pub drop_subject: bool,
    pub question: bool,
}

fn is_clause(node: &Annotated) -> bool {
    matches!(
        node.kind,
        NodeKind::Phrase(PhraseKind::S) | NodeKind::Phrase(PhraseKind::SP)
    )
}

fn vp_index(s: &Annotated) -> Option<usize> {
    s.children
        .iter()
        .position(|c| c.kind == NodeKind::Phrase(PhraseKind::VP))
}

fn sentence_type(node: &Annotated) -> SentenceType {
    node.options.typ.unwrap_or_default()
}

/// Applies the sentence type of every clause: passive restructuring first,
/// then the verb chain of each clause's finite verb.
pub fn apply_sentence_type(engine: &Engine, tree: &mut Annotated, warnings: &mut Vec<Warning>) {
    if passivize_all(tree, warnings) {
        propagate_agreement(engine, tree);
    }
    build_chains(engine, tree, warnings);
}

fn passivize_all(node: &mut Annotated, warnings: &mut Vec<Warning>) -> bool {
    let mut changed = false;
    for child in node.children.iter_mut() {
        changed |= passivize_all(child, warnings);
    }
    if is_clause(node) && sentence_type(node).pas && !node.passive {
        match passivize(node) {
            Ok(()) => changed = true,
            Err(context) => warnings.push(Warning {
                code: WarningCode::UnsupportedOption,
                language: node.lang,
                lemma: context,
                context: "typ.pas".into(),
            }),
        }
    }
    changed
}

/// S(subject, VP(V, object, …)) becomes S(object, VP(V, PP(by, subject), …)).
fn passivize(s: &mut Annotated) -> Result<(), String> {
    let shape_error = || "S".to_string();
    let subject = subject_index(s).ok_or_else(shape_error)?;
    let vp = vp_index(s).ok_or_else(shape_error)?;
    let verb = main_verb_index(&s.children[vp]).ok_or_else(shape_error)?;
    let object = s.children[vp].children[verb + 1..]
        .iter()
        .position(is_nominal)
        .map(|i| i + verb + 1)
        .ok_or_else(|| s.children[vp].children[verb].lemma().unwrap_or("V").to_string())?;
    let verb_lang = s.children[vp].children[verb].lang;
    let by = match verb_lang {
        Language::En => "by",
        Language::Fr => "par",
    };
    let object_node = s.children[vp].children[object].clone();
    let subject_node = std::mem::replace(&mut s.children[subject], object_node);
    let agent = Annotated::phrase(
        PhraseKind::PP,
        verb_lang,
        vec![
            Annotated::terminal(TerminalKind::P, TerminalValue::Lemma(by.into()), verb_lang),
            subject_node,
        ],
    );
    s.children[vp].children[object] = agent;
    s.passive = true;
    Ok(())
}

fn build_chains(engine: &Engine, node: &mut Annotated, warnings: &mut Vec<Warning>) {
    for child in node.children.iter_mut() {
        build_chains(engine, child, warnings);
    }
    if !is_clause(node) {
        return;
    }
    let mut typ = sentence_type(node);
    if !node.passive {
        typ.pas = false;
    }
    let Some(vp) = vp_index(node) else {
        if !typ.is_affirmative() {
            warnings.push(unsupported(node.lang, node.kind.code(), "typ"));
        }
        return;
    };
    let Some(verb) = main_verb_index(&node.children[vp]) else {
        if !typ.is_affirmative() {
            warnings.push(unsupported(node.lang, node.kind.code(), "typ"));
        }
        return;
    };
    let subject = subject_index(node).map(|i| node.children[i].clone());
    let v = &node.children[vp].children[verb];
    let lang = v.lang;

    if lang == Language::Fr && typ.neg && !typ.pas {
        partitive_negation(&mut node.children[vp], verb);
    }

    let v = &node.children[vp].children[verb];
    let form = match lang {
        Language::En => english(engine, v, typ, subject.as_ref(), warnings),
        Language::Fr => french(engine, v, typ, subject.as_ref(), warnings),
    };
    node.children[vp].children[verb].chain = Some(form.chain);
    node.clause = Some(ClauseForm {
        front: form.front,
        tail: form.tail,
        drop_subject: form.drop_subject,
        question: typ.is_question(),
    });
}

fn unsupported(lang: Language, lemma: &str, context: &str) -> Warning {
    Warning {
        code: WarningCode::UnsupportedOption,
        language: lang,
        lemma: lemma.to_string(),
        context: context.to_string(),
    }
}

/// Under negation an indefinite direct object takes "de": ne mange pas de pommes.
fn partitive_negation(vp: &mut Annotated, verb: usize) {
    let Some(object) = vp.children[verb + 1..]
        .iter_mut()
        .find(|c| c.kind == NodeKind::Phrase(PhraseKind::NP))
    else {
        return;
    };
    if let Some(d) = object
        .children
        .iter_mut()
        .find(|c| c.kind == NodeKind::Terminal(TerminalKind::D) && c.lang == Language::Fr)
    {
        if d.lemma() == Some("un") {
            d.kind = NodeKind::Terminal(TerminalKind::P);
            d.value = Some(TerminalValue::Lemma("de".into()));
        }
    }
}

struct Chain {
    front: Vec<Token>,
    chain: Vec<Token>,
    tail: Vec<Token>,
    drop_subject: bool,
}

#[derive(Clone, Copy, PartialEq)]
enum Form {
    Finite,
    Base,
    Participle,
}

fn verb_form(
    engine: &Engine,
    lang: Language,
    lemma: &str,
    form: Form,
    v: &Annotated,
    warnings: &mut Vec<Warning>,
) -> String {
    let lex = engine.lexicon(lang);
    let result = match form {
        Form::Finite => morphology::form(
            lex,
            lemma,
            Pos::V,
            &crate::features::verb_cell(v.tense, v.person, v.number),
        ),
        Form::Base => morphology::infinitive(lex, lemma),
        Form::Participle => morphology::past_participle(lex, lemma, v.gender, v.number),
    };
    result.unwrap_or_else(|err| {
        warnings.push(Warning::from_morph(&err, lang, lemma));
        lemma.to_string()
    })
}

fn words(texts: impl IntoIterator<Item = String>, lang: Language) -> Vec<Token> {
    texts.into_iter().map(|t| Token::word(t, lang)).collect()
}

fn english(
    engine: &Engine,
    v: &Annotated,
    typ: SentenceType,
    subject: Option<&Annotated>,
    warnings: &mut Vec<Warning>,
) -> Chain {
    let lang = Language::En;
    let main = v.lemma().unwrap_or_default().to_string();
    let mut seq: Vec<&str> = Vec::new();
    if v.tense == Tense::Future {
        seq.push("will");
    }
    if typ.modality == Some(Modality::Possibility) && main != "can" {
        seq.push("can");
    }
    if typ.pas {
        seq.push("be");
    }
    let lexical = seq.is_empty() && !["be", "can", "will"].contains(&main.as_str());
    let needs_do = lexical && (typ.neg || typ.int == Some(Interrogative::YesNo));
    if needs_do {
        seq.push("do");
    }
    seq.push(&main);

    let mut finite = String::new();
    let mut rest: Vec<String> = Vec::new();
    for (i, lemma) in seq.iter().enumerate() {
        if i == 0 {
            finite = if *lemma == "will" {
                "will".to_string()
            } else {
                verb_form(engine, lang, lemma, Form::Finite, v, warnings)
            };
            continue;
        }
        let after_passive_be = typ.pas && seq[i - 1] == "be" && i + 1 == seq.len();
        if *lemma == "can" {
            rest.extend(["be", "able", "to"].map(String::from));
        } else if after_passive_be {
            rest.push(verb_form(engine, lang, lemma, Form::Participle, v, warnings));
        } else {
            rest.push(verb_form(engine, lang, lemma, Form::Base, v, warnings));
        }
    }

    let mut chain = Chain {
        front: Vec::new(),
        chain: Vec::new(),
        tail: Vec::new(),
        drop_subject: false,
    };
    let yon = typ.int == Some(Interrogative::YesNo);
    if yon {
        chain.front.push(Token::word(finite.clone(), lang));
    } else if typ.neg && finite == "can" {
        chain.chain.push(Token::word("cannot", lang));
    } else {
        chain.chain.push(Token::word(finite.clone(), lang));
    }
    if typ.neg && !(finite == "can" && !yon) {
        chain.chain.push(Token::word("not", lang));
    }
    chain.chain.extend(words(rest, lang));

    if typ.int == Some(Interrogative::Tag) {
        let aux = if lexical && !needs_do {
            verb_form(engine, lang, "do", Form::Finite, v, warnings)
        } else {
            finite.clone()
        };
        let pronoun = english_pronoun(subject);
        let aux = if typ.neg {
            aux
        } else {
            negative_contraction(&aux, &pronoun)
        };
        chain.tail = vec![
            Token::punct(",", lang),
            Token::word(aux, lang),
            Token::word(pronoun, lang),
        ];
    }
    chain
}

fn english_pronoun(subject: Option<&Annotated>) -> String {
    let Some(s) = subject else {
        return "it".into();
    };
    if s.kind == NodeKind::Terminal(TerminalKind::Pro) && s.lang == Language::En {
        if let Some(lemma) = s.lemma() {
            return lemma.to_string();
        }
    }
    if s.person != Person::Third || s.number == Number::Plural {
        return personal_pronoun(s.person, s.number, s.gender, Language::En).to_string();
    }
    if s.gender_known {
        pronoun_for(s.gender, s.number, Language::En).to_string()
    } else {
        "it".into()
    }
}

fn negative_contraction(aux: &str, pronoun: &str) -> String {
    match (aux, pronoun) {
        ("am", _) => "aren't".into(),
        ("will", _) => "won't".into(),
        ("can", _) => "can't".into(),
        _ => format!("{aux}n't"),
    }
}

fn ends_with_vowel(word: &str) -> bool {
    word.chars().last().is_some_and(|c| "aeiouéèêàâ".contains(c))
}

fn french(
    engine: &Engine,
    v: &Annotated,
    typ: SentenceType,
    subject: Option<&Annotated>,
    warnings: &mut Vec<Warning>,
) -> Chain {
    let lang = Language::Fr;
    let main = v.lemma().unwrap_or_default().to_string();
    let mut seq: Vec<&str> = Vec::new();
    if typ.modality == Some(Modality::Possibility) && main != "pouvoir" {
        seq.push("pouvoir");
    }
    if typ.pas {
        seq.push("être");
    }
    seq.push(&main);

    let finite = verb_form(engine, lang, seq[0], Form::Finite, v, warnings);
    let rest: Vec<String> = seq[1..]
        .iter()
        .enumerate()
        .map(|(i, lemma)| {
            let form = if typ.pas && i + 2 == seq.len() {
                Form::Participle
            } else {
                Form::Base
            };
            verb_form(engine, lang, lemma, form, v, warnings)
        })
        .collect();

    let mut chain = Chain {
        front: Vec::new(),
        chain: Vec::new(),
        tail: Vec::new(),
        drop_subject: false,
    };
    if typ.neg {
        chain.chain.push(Token::word("ne", lang));
    }
    chain.chain.push(Token::word(finite.clone(), lang));
    if typ.int == Some(Interrogative::YesNo) {
        let (pronoun, drop) = match subject {
            Some(s)
                if s.kind == NodeKind::Terminal(TerminalKind::Pro)
                    && s.lemma()
                        .and_then(|l| pronoun_features(l, Language::Fr))
                        .is_some() =>
            {
                (
                    personal_pronoun(s.person, s.number, s.gender, lang).to_string(),
                    true,
                )
            }
            Some(s) => (
                personal_pronoun(s.person, s.number, s.gender, lang).to_string(),
                false,
            ),
            None => ("il".to_string(), false),
        };
        let euphonic = ends_with_vowel(&finite) && matches!(pronoun.as_str(), "il" | "elle" | "on");
        let text = if euphonic {
            format!("-t-{pronoun}")
        } else {
            format!("-{pronoun}")
        };
        chain.chain.push(Token::new(text, lang, TokenKind::Hyphenated));
        chain.drop_subject = drop;
    }
    if typ.neg {
        chain.chain.push(Token::word("pas", lang));
    }
    chain.chain.extend(words(rest, lang));
    if typ.int == Some(Interrogative::Tag) {
        chain.tail = vec![
            Token::punct(",", lang),
            Token::new("n'est-ce", lang, TokenKind::Verbatim),
            Token::new("pas", lang, TokenKind::Verbatim),
        ];
    }
    chain
}
