//! Realization pipeline: agreement, sentence type, linearization and
//! post-processing.

mod agreement;
mod clause;
mod linearize;
mod postprocess;

pub use agreement::{propagate_agreement, Agr};
pub use clause::{apply_sentence_type, ClauseForm};
pub use linearize::{linearize, PRENOMINAL_FR};
pub use postprocess::{post_process, tokens_from_text, Token, TokenKind};

use std::fmt;

use serde::Serialize;

use crate::engine::Engine;
use crate::features::{Gender, Language, Number, Person, Tense};
use crate::lexicon::LexiconError;
use crate::morphology::MorphError;
use crate::syntax::{Constituent, NodeKind, Options, PhraseKind, TerminalKind, TerminalValue};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum WarningCode {
    MissingLemma,
    MissingPos,
    MissingCell,
    UnsupportedOption,
}

/// Non-fatal realization problem; the offending lemma is emitted as is.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Warning {
    pub code: WarningCode,
    pub language: Language,
    pub lemma: String,
    pub context: String,
}

impl Warning {
    pub(crate) fn from_morph(err: &MorphError, language: Language, lemma: &str) -> Self {
        let (code, context) = match err {
            MorphError::Lookup(LexiconError::MissingLemma { .. }) => {
                (WarningCode::MissingLemma, String::new())
            }
            MorphError::Lookup(LexiconError::MissingPos { pos, .. }) => {
                (WarningCode::MissingPos, pos.to_string())
            }
            MorphError::MissingCell { cell, .. } => (WarningCode::MissingCell, cell.clone()),
            other => (WarningCode::MissingCell, other.to_string()),
        };
        Warning {
            code,
            language,
            lemma: lemma.to_string(),
            context,
        }
    }

    /// Message in the language the problem was found in.
    pub fn message(&self) -> String {
        let (lemma, ctx) = (&self.lemma, &self.context);
        match (self.language, self.code) {
            (Language::En, WarningCode::MissingLemma) => {
                format!("\"{lemma}\" is not in the English lexicon")
            }
            (Language::En, WarningCode::MissingPos) => {
                format!("\"{lemma}\" has no {ctx} entry in the English lexicon")
            }
            (Language::En, WarningCode::MissingCell) => format!("\"{lemma}\" has no form for {ctx}"),
            (Language::En, WarningCode::UnsupportedOption) => {
                format!("option {ctx} is not supported for \"{lemma}\"")
            }
            (Language::Fr, WarningCode::MissingLemma) => {
                format!("« {lemma} » n'est pas dans le lexique français")
            }
            (Language::Fr, WarningCode::MissingPos) => {
                format!("« {lemma} » n'a pas d'entrée {ctx} dans le lexique français")
            }
            (Language::Fr, WarningCode::MissingCell) => {
                format!("« {lemma} » n'a pas de forme pour {ctx}")
            }
            (Language::Fr, WarningCode::UnsupportedOption) => {
                format!("l'option {ctx} n'est pas prise en charge pour « {lemma} »")
            }
        }
    }
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Realization {
    pub text: String,
    pub warnings: Vec<Warning>,
}

/// A constituent together with the features and surface material the
/// pipeline resolves for it.
#[derive(Debug, Clone, PartialEq)]
pub struct Annotated {
    pub kind: NodeKind,
    pub value: Option<TerminalValue>,
    pub lang: Language,
    pub options: Options,
    pub children: Vec<Annotated>,
    pub number: Number,
    pub gender: Gender,
    pub person: Person,
    pub gender_known: bool,
    pub tense: Tense,
    pub passive: bool,
    pub clause: Option<ClauseForm>,
    /// verb chain replacing a clause's finite verb
    pub chain: Option<Vec<Token>>,
}

impl Annotated {
    fn bare(kind: NodeKind, value: Option<TerminalValue>, lang: Language) -> Self {
        Annotated {
            kind,
            value,
            lang,
            options: Options::default(),
            children: Vec::new(),
            number: Number::Singular,
            gender: Gender::Masculine,
            person: Person::Third,
            gender_known: false,
            tense: Tense::Present,
            passive: false,
            clause: None,
            chain: None,
        }
    }

    pub fn terminal(kind: TerminalKind, value: TerminalValue, lang: Language) -> Self {
        Annotated::bare(NodeKind::Terminal(kind), Some(value), lang)
    }

    pub fn phrase(kind: PhraseKind, lang: Language, children: Vec<Annotated>) -> Self {
        let mut node = Annotated::bare(NodeKind::Phrase(kind), None, lang);
        node.children = children;
        node
    }

    pub fn lemma(&self) -> Option<&str> {
        match &self.value {
            Some(TerminalValue::Lemma(s)) => Some(s),
            _ => None,
        }
    }
}

impl From<&Constituent> for Annotated {
    fn from(c: &Constituent) -> Self {
        let mut node = Annotated::bare(c.kind(), c.value().cloned(), c.lang());
        node.options = c.options().clone();
        node.children = c.children().iter().map(Annotated::from).collect();
        node
    }
}

/// Full pipeline. Never fails: problems are reported as warnings.
pub fn realize(engine: &Engine, tree: &Constituent) -> Realization {
    let mut warnings = Vec::new();
    let mut node = Annotated::from(tree);
    propagate_agreement(engine, &mut node);
    apply_sentence_type(engine, &mut node, &mut warnings);
    let mut tokens = Vec::new();
    let sentence = node.kind == NodeKind::Phrase(PhraseKind::S);
    if sentence {
        tokens.push(Token::new("", node.lang, TokenKind::SentenceStart));
    }
    tokens.extend(linearize(engine, &node, &mut warnings));
    if sentence {
        let question = node.clause.as_ref().is_some_and(|c| c.question);
        tokens.push(Token::new(
            if question { "?" } else { "." },
            node.lang,
            TokenKind::Terminator,
        ));
    }
    Realization {
        text: post_process(&tokens, node.lang),
        warnings,
    }
}
