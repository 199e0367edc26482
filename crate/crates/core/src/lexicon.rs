//! Per-language lexicons and the inflection tables they point into.
//!
//! A lexicon file maps each lemma to one record per part of speech:
//!
//! ```json
//! { "chat": { "N": { "g": "m", "tab": "n1" } },
//!   "heureux": { "A": { "tab": "a_x" } },
//!   "être": { "V": { "tab": "vI", "irr": { "p:3s": "est" } } } }
//! ```
//!
//! The companion rules file holds the tables:
//! `{ "tables": { "n1": { "kind": "noun", "strip": 0, "endings": { "s": "", "p": "s" } } } }`.
//! A form is the lemma minus `strip` trailing characters plus the ending of the
//! requested cell, unless the entry carries an irregular form for that cell.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::features::{FeatureParseError, Gender, Language};

#[derive(Debug, Error)]
pub enum LexiconError {
    #[error("malformed {file} file: {source}")]
    Parse {
        file: &'static str,
        #[source]
        source: serde_json::Error,
    },
    #[error("invalid {language} lexicon: {reason}")]
    Validation { language: Language, reason: String },
    #[error("«{lemma}» is absent from the {} lexicon", language.name())]
    MissingLemma { language: Language, lemma: String },
    #[error("«{lemma}» has no {pos} entry in the {} lexicon", language.name())]
    MissingPos {
        language: Language,
        lemma: String,
        pos: Pos,
    },
}

impl LexiconError {
    fn invalid(language: Language, reason: impl Into<String>) -> Self {
        LexiconError::Validation {
            language,
            reason: reason.into(),
        }
    }
}

/// Parts of speech that carry lexicon records.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Pos {
    N,
    V,
    A,
    D,
    Pro,
    Adv,
    P,
    C,
}

impl Pos {
    pub const ALL: [Pos; 8] = [Pos::N, Pos::V, Pos::A, Pos::D, Pos::Pro, Pos::Adv, Pos::P, Pos::C];

    pub fn code(self) -> &'static str {
        match self {
            Pos::N => "N",
            Pos::V => "V",
            Pos::A => "A",
            Pos::D => "D",
            Pos::Pro => "Pro",
            Pos::Adv => "Adv",
            Pos::P => "P",
            Pos::C => "C",
        }
    }

    /// The table kind a record of this part of speech must point to.
    pub fn table_kind(self) -> TableKind {
        match self {
            Pos::N => TableKind::Noun,
            Pos::V => TableKind::Verb,
            Pos::A => TableKind::Adjective,
            Pos::D => TableKind::Determiner,
            Pos::Pro => TableKind::Pronoun,
            Pos::Adv | Pos::P | Pos::C => TableKind::Invariable,
        }
    }

    fn takes_gender(self) -> bool {
        matches!(self, Pos::N | Pos::A | Pos::D | Pos::Pro)
    }
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for Pos {
    type Err = FeatureParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Pos::ALL
            .into_iter()
            .find(|p| p.code() == s)
            .ok_or(FeatureParseError {
                feature: "part of speech",
                value: s.to_string(),
            })
    }
}

/// One part-of-speech record of a lexicon entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<Gender>,
    pub tab: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub irr: BTreeMap<String, String>,
}

impl PosRecord {
    pub fn new(tab: impl Into<String>) -> Self {
        PosRecord {
            g: None,
            tab: tab.into(),
            irr: BTreeMap::new(),
        }
    }

    pub fn with_gender(mut self, g: Gender) -> Self {
        self.g = Some(g);
        self
    }

    pub fn with_irregular(mut self, key: impl Into<String>, form: impl Into<String>) -> Self {
        self.irr.insert(key.into(), form.into());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LexEntry(pub BTreeMap<Pos, PosRecord>);

impl LexEntry {
    pub fn new() -> Self {
        LexEntry::default()
    }

    pub fn single(pos: Pos, record: PosRecord) -> Self {
        let mut entry = LexEntry::new();
        entry.0.insert(pos, record);
        entry
    }

    pub fn with(mut self, pos: Pos, record: PosRecord) -> Self {
        self.0.insert(pos, record);
        self
    }

    pub fn get(&self, pos: Pos) -> Option<&PosRecord> {
        self.0.get(&pos)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableKind {
    Noun,
    Adjective,
    Verb,
    Determiner,
    Pronoun,
    Invariable,
}

const VERB_TENSES: [&str; 3] = ["p", "ps", "f"];
const PERSON_NUMBERS: [&str; 6] = ["1s", "2s", "3s", "1p", "2p", "3p"];

impl TableKind {
    /// Every cell a table of this kind must define.
    pub fn required_cells(self) -> Vec<String> {
        let owned = |xs: &[&str]| xs.iter().map(|s| s.to_string()).collect();
        match self {
            TableKind::Noun | TableKind::Pronoun => owned(&["s", "p"]),
            TableKind::Adjective | TableKind::Determiner => owned(&["ms", "fs", "mp", "fp"]),
            TableKind::Invariable => owned(&["b"]),
            TableKind::Verb => {
                let mut cells: Vec<String> = VERB_TENSES
                    .iter()
                    .flat_map(|t| PERSON_NUMBERS.iter().map(move |pn| format!("{t}:{pn}")))
                    .collect();
                cells.push("b".into());
                cells.push("pp".into());
                cells
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InflectionTable {
    pub kind: TableKind,
    pub strip: usize,
    pub endings: BTreeMap<String, String>,
}

impl InflectionTable {
    /// Applies the table to `lemma` for `cell`; `None` when the cell is absent
    /// or the lemma is too short for the stem strip.
    pub fn apply(&self, lemma: &str, cell: &str) -> Option<String> {
        let ending = self.endings.get(cell)?;
        let len = lemma.chars().count();
        if self.strip > len {
            return None;
        }
        let mut form: String = lemma.chars().take(len - self.strip).collect();
        form.push_str(ending);
        Some(form)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct RuleSet {
    pub tables: BTreeMap<String, InflectionTable>,
}

impl RuleSet {
    fn validate(&self, language: Language) -> Result<(), LexiconError> {
        for (id, table) in &self.tables {
            for cell in table.kind.required_cells() {
                if !table.endings.contains_key(&cell) {
                    return Err(LexiconError::invalid(
                        language,
                        format!("table {id} lacks cell {cell}"),
                    ));
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Lexicon {
    language: Language,
    entries: BTreeMap<String, LexEntry>,
    rules: RuleSet,
}

/// Loads and validates a lexicon against its rules file.
pub fn load_lexicon(language: Language, lexicon: &[u8], rules: &[u8]) -> Result<Lexicon, LexiconError> {
    let rules: RuleSet = serde_json::from_slice(rules).map_err(|source| LexiconError::Parse {
        file: "rules",
        source,
    })?;
    let entries: BTreeMap<String, LexEntry> =
        serde_json::from_slice(lexicon).map_err(|source| LexiconError::Parse {
            file: "lexicon",
            source,
        })?;
    rules.validate(language)?;
    let lexicon = Lexicon {
        language,
        entries,
        rules,
    };
    for (lemma, entry) in &lexicon.entries {
        lexicon.validate_entry(lemma, entry)?;
    }
    Ok(lexicon)
}

impl Lexicon {
    pub fn language(&self) -> Language {
        self.language
    }

    pub fn rules(&self) -> &RuleSet {
        &self.rules
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&str, &LexEntry)> {
        self.entries.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn contains(&self, lemma: &str) -> bool {
        self.entries.contains_key(lemma)
    }

    pub fn lookup(&self, lemma: &str, pos: Pos) -> Result<&PosRecord, LexiconError> {
        let entry = self
            .entries
            .get(lemma)
            .ok_or_else(|| LexiconError::MissingLemma {
                language: self.language,
                lemma: lemma.to_string(),
            })?;
        entry.get(pos).ok_or_else(|| LexiconError::MissingPos {
            language: self.language,
            lemma: lemma.to_string(),
            pos,
        })
    }

    pub fn table(&self, id: &str) -> Option<&InflectionTable> {
        self.rules.tables.get(id)
    }

    /// Adds or merges an entry; records of a part of speech already present are replaced.
    pub fn add_to_lexicon(&mut self, lemma: &str, entry: LexEntry) -> Result<(), LexiconError> {
        self.validate_entry(lemma, &entry)?;
        self.entries
            .entry(lemma.to_string())
            .or_default()
            .0
            .extend(entry.0);
        Ok(())
    }

    fn validate_entry(&self, lemma: &str, entry: &LexEntry) -> Result<(), LexiconError> {
        let lang = self.language;
        if lemma.is_empty() {
            return Err(LexiconError::invalid(lang, "empty lemma"));
        }
        if entry.0.is_empty() {
            return Err(LexiconError::invalid(
                lang,
                format!("«{lemma}» has no part-of-speech record"),
            ));
        }
        for (pos, record) in &entry.0 {
            let table = self.rules.tables.get(&record.tab).ok_or_else(|| {
                LexiconError::invalid(
                    lang,
                    format!("«{lemma}» {pos} refers to unknown table {}", record.tab),
                )
            })?;
            if table.kind != pos.table_kind() {
                return Err(LexiconError::invalid(
                    lang,
                    format!("«{lemma}» {pos} refers to a {:?} table", table.kind),
                ));
            }
            if table.strip > lemma.chars().count() {
                return Err(LexiconError::invalid(
                    lang,
                    format!("table {} strips more than «{lemma}» has", record.tab),
                ));
            }
            if record.g.is_some() && !pos.takes_gender() {
                return Err(LexiconError::invalid(
                    lang,
                    format!("«{lemma}» {pos} cannot carry a gender"),
                ));
            }
            if let Some(key) = record.irr.keys().find(|k| !table.endings.contains_key(*k)) {
                return Err(LexiconError::invalid(
                    lang,
                    format!("«{lemma}» {pos} has irregular form for unknown cell {key}"),
                ));
            }
        }
        Ok(())
    }

    /// Serializes back to the (lexicon, rules) file pair.
    pub fn to_json(&self) -> (String, String) {
        let lexicon = serde_json::to_string_pretty(&self.entries).expect("lexicon serializes");
        let rules = serde_json::to_string_pretty(&self.rules).expect("rules serialize");
        (lexicon, rules)
    }
}
