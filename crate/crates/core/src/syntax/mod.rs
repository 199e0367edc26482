//! Constituent trees: terminals, phrases, options, deferred templates and
//! random choice between alternatives.

mod options;

pub use options::{Bracket, Interrogative, Modality, OptionError, Options, SentenceType};

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use chrono::NaiveDateTime;
use rand::Rng;
use serde_json::Value;
use thiserror::Error;

use crate::features::{Gender, Language, Number, Person, Tense};
use crate::lexicon::Pos;
use crate::morphology::DateOptions;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SyntaxError {
    #[error("{kind} cannot carry {value}")]
    KindValueMismatch { kind: NodeKind, value: String },
    #[error("{0} is a terminal and has no children")]
    NotAPhrase(NodeKind),
    #[error("position {index} is out of range for {len} children")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("no alternatives to choose from")]
    EmptyAlternatives,
    #[error("template expects {expected} arguments, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("unknown node kind {0}")]
    UnknownKind(String),
    #[error("template: {0}")]
    Template(String),
    #[error(transparent)]
    Option(#[from] OptionError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TerminalKind {
    N,
    V,
    A,
    D,
    Pro,
    Adv,
    P,
    C,
    /// number
    NO,
    /// date-time
    DT,
    /// verbatim text
    Q,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PhraseKind {
    S,
    /// subordinate: realized like S but without capital or terminator
    SP,
    NP,
    VP,
    AP,
    CP,
    PP,
    AdvP,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeKind {
    Terminal(TerminalKind),
    Phrase(PhraseKind),
}

impl TerminalKind {
    pub const ALL: [TerminalKind; 11] = [
        TerminalKind::N,
        TerminalKind::V,
        TerminalKind::A,
        TerminalKind::D,
        TerminalKind::Pro,
        TerminalKind::Adv,
        TerminalKind::P,
        TerminalKind::C,
        TerminalKind::NO,
        TerminalKind::DT,
        TerminalKind::Q,
    ];

    pub fn code(self) -> &'static str {
        match self {
            TerminalKind::N => "N",
            TerminalKind::V => "V",
            TerminalKind::A => "A",
            TerminalKind::D => "D",
            TerminalKind::Pro => "Pro",
            TerminalKind::Adv => "Adv",
            TerminalKind::P => "P",
            TerminalKind::C => "C",
            TerminalKind::NO => "NO",
            TerminalKind::DT => "DT",
            TerminalKind::Q => "Q",
        }
    }

    /// Lexicon part of speech for lemma-carrying kinds.
    pub fn pos(self) -> Option<Pos> {
        Some(match self {
            TerminalKind::N => Pos::N,
            TerminalKind::V => Pos::V,
            TerminalKind::A => Pos::A,
            TerminalKind::D => Pos::D,
            TerminalKind::Pro => Pos::Pro,
            TerminalKind::Adv => Pos::Adv,
            TerminalKind::P => Pos::P,
            TerminalKind::C => Pos::C,
            _ => return None,
        })
    }
}

impl PhraseKind {
    pub const ALL: [PhraseKind; 8] = [
        PhraseKind::S,
        PhraseKind::SP,
        PhraseKind::NP,
        PhraseKind::VP,
        PhraseKind::AP,
        PhraseKind::CP,
        PhraseKind::PP,
        PhraseKind::AdvP,
    ];

    pub fn code(self) -> &'static str {
        match self {
            PhraseKind::S => "S",
            PhraseKind::SP => "SP",
            PhraseKind::NP => "NP",
            PhraseKind::VP => "VP",
            PhraseKind::AP => "AP",
            PhraseKind::CP => "CP",
            PhraseKind::PP => "PP",
            PhraseKind::AdvP => "AdvP",
        }
    }
}

impl NodeKind {
    pub fn code(self) -> &'static str {
        match self {
            NodeKind::Terminal(t) => t.code(),
            NodeKind::Phrase(p) => p.code(),
        }
    }

    pub fn is_terminal(self) -> bool {
        matches!(self, NodeKind::Terminal(_))
    }
}

impl fmt::Display for NodeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for NodeKind {
    type Err = SyntaxError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TerminalKind::ALL
            .iter()
            .map(|k| NodeKind::Terminal(*k))
            .chain(PhraseKind::ALL.iter().map(|k| NodeKind::Phrase(*k)))
            .find(|k| k.code() == s)
            .ok_or_else(|| SyntaxError::UnknownKind(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum TerminalValue {
    Lemma(String),
    Number(i64),
    Date(NaiveDateTime),
    Text(String),
}

impl TerminalValue {
    fn fits(&self, kind: TerminalKind) -> bool {
        matches!(
            (kind, self),
            (TerminalKind::NO, TerminalValue::Number(_))
                | (TerminalKind::DT, TerminalValue::Date(_))
                | (TerminalKind::Q, TerminalValue::Text(_))
        ) || (kind.pos().is_some() && matches!(self, TerminalValue::Lemma(_)))
    }

    fn describe(&self) -> String {
        match self {
            TerminalValue::Lemma(s) => format!("lemma {s:?}"),
            TerminalValue::Number(n) => format!("number {n}"),
            TerminalValue::Date(d) => format!("date {d}"),
            TerminalValue::Text(s) => format!("text {s:?}"),
        }
    }
}

/// A terminal or a phrase. The language stamp is fixed at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct Constituent {
    kind: NodeKind,
    value: Option<TerminalValue>,
    lang: Language,
    options: Options,
    children: Vec<Constituent>,
}

impl Constituent {
    pub fn terminal(
        kind: TerminalKind,
        value: TerminalValue,
        lang: Language,
    ) -> Result<Constituent, SyntaxError> {
        if !value.fits(kind) {
            return Err(SyntaxError::KindValueMismatch {
                kind: NodeKind::Terminal(kind),
                value: value.describe(),
            });
        }
        Ok(Constituent {
            kind: NodeKind::Terminal(kind),
            value: Some(value),
            lang,
            options: Options::default(),
            children: Vec::new(),
        })
    }

    pub fn phrase<I>(kind: PhraseKind, children: I, lang: Language) -> Constituent
    where
        I: IntoIterator,
        I::Item: Into<Arg>,
    {
        let mut flat = Vec::new();
        for arg in children {
            arg.into().flatten_into(&mut flat);
        }
        Constituent {
            kind: NodeKind::Phrase(kind),
            value: None,
            lang,
            options: Options::default(),
            children: flat,
        }
    }

    pub fn kind(&self) -> NodeKind {
        self.kind
    }

    pub fn terminal_kind(&self) -> Option<TerminalKind> {
        match self.kind {
            NodeKind::Terminal(t) => Some(t),
            NodeKind::Phrase(_) => None,
        }
    }

    pub fn phrase_kind(&self) -> Option<PhraseKind> {
        match self.kind {
            NodeKind::Phrase(p) => Some(p),
            NodeKind::Terminal(_) => None,
        }
    }

    pub fn is_terminal(&self) -> bool {
        self.kind.is_terminal()
    }

    pub fn value(&self) -> Option<&TerminalValue> {
        self.value.as_ref()
    }

    pub fn lemma(&self) -> Option<&str> {
        match &self.value {
            Some(TerminalValue::Lemma(s)) => Some(s),
            _ => None,
        }
    }

    pub fn lang(&self) -> Language {
        self.lang
    }

    pub fn options(&self) -> &Options {
        &self.options
    }

    pub fn children(&self) -> &[Constituent] {
        &self.children
    }

    pub fn child_mut(&mut self, index: usize) -> Option<&mut Constituent> {
        self.children.get_mut(index)
    }

    pub fn set_option(&mut self, key: &str, value: &Value) -> Result<&mut Self, SyntaxError> {
        self.options.set(key, value)?;
        Ok(self)
    }

    /// Inserts `child` at `position`, appending when `None`.
    pub fn add(&mut self, child: Constituent, position: Option<usize>) -> Result<&mut Self, SyntaxError> {
        if self.is_terminal() {
            return Err(SyntaxError::NotAPhrase(self.kind));
        }
        let index = position.unwrap_or(self.children.len());
        if index > self.children.len() {
            return Err(SyntaxError::IndexOutOfRange {
                index,
                len: self.children.len(),
            });
        }
        self.children.insert(index, child);
        Ok(self)
    }

    pub fn n(mut self, number: Number) -> Self {
        self.options.n = Some(number);
        self
    }

    pub fn g(mut self, gender: Gender) -> Self {
        self.options.g = Some(gender);
        self
    }

    pub fn pe(mut self, person: Person) -> Self {
        self.options.pe = Some(person);
        self
    }

    pub fn t(mut self, tense: Tense) -> Self {
        self.options.t = Some(tense);
        self
    }

    /// Merges into any sentence type already set.
    pub fn typ(mut self, typ: SentenceType) -> Self {
        let cur = self.options.typ.get_or_insert_with(SentenceType::default);
        cur.neg |= typ.neg;
        cur.pas |= typ.pas;
        cur.int = typ.int.or(cur.int);
        cur.modality = typ.modality.or(cur.modality);
        self
    }

    pub fn ba(mut self, bracket: Bracket) -> Self {
        self.options.ba = Some(bracket);
        self
    }

    /// Enabling every segment is the same as leaving the option unset.
    pub fn d_opt(mut self, opts: DateOptions) -> Self {
        self.options.d_opt = (opts != DateOptions::default()).then_some(opts);
        self
    }

    /// Spell out a number.
    pub fn nat(mut self) -> Self {
        self.options.nat = Some(true);
        self
    }

    /// All nodes in pre-order.
    pub fn walk(&self) -> Vec<&Constituent> {
        let mut out = vec![self];
        for c in &self.children {
            out.extend(c.walk());
        }
        out
    }
}

/// Phrase argument: a constituent or a (nested) list of them.
#[derive(Debug, Clone)]
pub enum Arg {
    One(Constituent),
    Many(Vec<Arg>),
}

impl Arg {
    fn flatten_into(self, out: &mut Vec<Constituent>) {
        match self {
            Arg::One(c) => out.push(c),
            Arg::Many(args) => {
                for a in args {
                    a.flatten_into(out);
                }
            }
        }
    }
}

impl From<Constituent> for Arg {
    fn from(c: Constituent) -> Self {
        Arg::One(c)
    }
}

impl From<Vec<Constituent>> for Arg {
    fn from(v: Vec<Constituent>) -> Self {
        Arg::Many(v.into_iter().map(Arg::One).collect())
    }
}

impl From<Vec<Arg>> for Arg {
    fn from(v: Vec<Arg>) -> Self {
        Arg::Many(v)
    }
}

/// Builder bound to a language; terminals it creates carry that stamp.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Builder {
    lang: Language,
}

macro_rules! lemma_terminals {
    ($($name:ident => $kind:ident),* $(,)?) => {
        $(
            pub fn $name(&self, lemma: &str) -> Constituent {
                self.lemma_terminal(TerminalKind::$kind, lemma)
            }
        )*
    };
}

macro_rules! phrases {
    ($($name:ident => $kind:ident),* $(,)?) => {
        $(
            pub fn $name<I>(&self, children: I) -> Constituent
            where
                I: IntoIterator,
                I::Item: Into<Arg>,
            {
                Constituent::phrase(PhraseKind::$kind, children, self.lang)
            }
        )*
    };
}

impl Builder {
    pub fn new(lang: Language) -> Self {
        Builder { lang }
    }

    pub fn lang(&self) -> Language {
        self.lang
    }

    fn lemma_terminal(&self, kind: TerminalKind, lemma: &str) -> Constituent {
        Constituent {
            kind: NodeKind::Terminal(kind),
            value: Some(TerminalValue::Lemma(lemma.to_string())),
            lang: self.lang,
            options: Options::default(),
            children: Vec::new(),
        }
    }

    lemma_terminals! {
        n => N, v => V, a => A, d => D, pro => Pro, adv => Adv, p => P, c => C,
    }

    pub fn no(&self, value: i64) -> Constituent {
        Constituent {
            kind: NodeKind::Terminal(TerminalKind::NO),
            value: Some(TerminalValue::Number(value)),
            lang: self.lang,
            options: Options::default(),
            children: Vec::new(),
        }
    }

    pub fn dt(&self, value: NaiveDateTime) -> Constituent {
        Constituent {
            kind: NodeKind::Terminal(TerminalKind::DT),
            value: Some(TerminalValue::Date(value)),
            lang: self.lang,
            options: Options::default(),
            children: Vec::new(),
        }
    }

    pub fn q(&self, text: &str) -> Constituent {
        Constituent {
            kind: NodeKind::Terminal(TerminalKind::Q),
            value: Some(TerminalValue::Text(text.to_string())),
            lang: self.lang,
            options: Options::default(),
            children: Vec::new(),
        }
    }

    phrases! {
        s => S, sp => SP, np => NP, vp => VP, ap => AP, cp => CP, pp => PP, advp => AdvP,
    }
}

pub type DeferredTree = Arc<dyn Fn() -> Constituent + Send + Sync>;

/// Template argument: a word (lemma or feature code) or a deferred phrase.
#[derive(Clone)]
pub enum Param {
    Word(String),
    Tree(DeferredTree),
}

impl Param {
    pub fn word(s: &str) -> Self {
        Param::Word(s.to_string())
    }

    pub fn tree(f: impl Fn() -> Constituent + Send + Sync + 'static) -> Self {
        Param::Tree(Arc::new(f))
    }

    pub fn as_word(&self) -> Option<&str> {
        match self {
            Param::Word(w) => Some(w),
            Param::Tree(_) => None,
        }
    }

    /// A fresh tree, or `None` for a word.
    pub fn build(&self) -> Option<Constituent> {
        match self {
            Param::Word(_) => None,
            Param::Tree(f) => Some(f()),
        }
    }
}

impl fmt::Debug for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Word(w) => write!(f, "Word({w:?})"),
            Param::Tree(_) => f.write_str("Tree(..)"),
        }
    }
}

type BuildFn = Arc<dyn Fn(&[Param]) -> Result<Constituent, SyntaxError> + Send + Sync>;

/// Deferred builder: each call constructs an independent tree.
#[derive(Clone)]
pub struct Template {
    params: Vec<String>,
    build: BuildFn,
}

impl Template {
    pub fn new(
        params: Vec<String>,
        build: impl Fn(&[Param]) -> Result<Constituent, SyntaxError> + Send + Sync + 'static,
    ) -> Self {
        Template {
            params,
            build: Arc::new(build),
        }
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn arity(&self) -> usize {
        self.params.len()
    }

    pub fn instantiate(&self, args: &[Param]) -> Result<Constituent, SyntaxError> {
        if args.len() != self.params.len() {
            return Err(SyntaxError::ArityMismatch {
                expected: self.params.len(),
                got: args.len(),
            });
        }
        (self.build)(args)
    }
}

impl fmt::Debug for Template {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Template")
            .field("params", &self.params)
            .finish_non_exhaustive()
    }
}

/// Alternative for [`one_of`]: a value or a builder called only when picked.
#[derive(Clone)]
pub enum Choice<T> {
    Value(T),
    Deferred(Arc<dyn Fn() -> T + Send + Sync>),
}

impl<T> Choice<T> {
    pub fn deferred(f: impl Fn() -> T + Send + Sync + 'static) -> Self {
        Choice::Deferred(Arc::new(f))
    }
}

/// Uniform pick; deferred alternatives are evaluated on selection.
pub fn one_of<T: Clone, R: Rng + ?Sized>(rng: &mut R, alternatives: &[Choice<T>]) -> Result<T, SyntaxError> {
    if alternatives.is_empty() {
        return Err(SyntaxError::EmptyAlternatives);
    }
    match &alternatives[rng.gen_range(0..alternatives.len())] {
        Choice::Value(v) => Ok(v.clone()),
        Choice::Deferred(f) => Ok(f()),
    }
}
