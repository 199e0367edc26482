//! Grammatical feature values shared by every layer of the engine.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("illegal value {value:?} for {feature}")]
pub struct FeatureParseError {
    pub feature: &'static str,
    pub value: String,
}

impl FeatureParseError {
    fn new(feature: &'static str, value: &str) -> Self {
        FeatureParseError {
            feature,
            value: value.to_string(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Language {
    #[serde(rename = "en")]
    En,
    #[serde(rename = "fr")]
    Fr,
}

impl Language {
    pub const ALL: [Language; 2] = [Language::En, Language::Fr];

    pub fn code(self) -> &'static str {
        match self {
            Language::En => "en",
            Language::Fr => "fr",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Language::En => "English",
            Language::Fr => "French",
        }
    }

    pub fn other(self) -> Language {
        match self {
            Language::En => Language::Fr,
            Language::Fr => Language::En,
        }
    }
}

impl fmt::Display for Language {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for Language {
    type Err = FeatureParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "en" => Ok(Language::En),
            "fr" => Ok(Language::Fr),
            _ => Err(FeatureParseError::new("language", s)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum Number {
    #[default]
    #[serde(rename = "s")]
    Singular,
    #[serde(rename = "p")]
    Plural,
}

impl Number {
    pub fn code(self) -> &'static str {
        match self {
            Number::Singular => "s",
            Number::Plural => "p",
        }
    }
}

impl FromStr for Number {
    type Err = FeatureParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "s" => Ok(Number::Singular),
            "p" => Ok(Number::Plural),
            _ => Err(FeatureParseError::new("number", s)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum Gender {
    #[default]
    #[serde(rename = "m")]
    Masculine,
    #[serde(rename = "f")]
    Feminine,
}

impl Gender {
    pub fn code(self) -> &'static str {
        match self {
            Gender::Masculine => "m",
            Gender::Feminine => "f",
        }
    }
}

impl FromStr for Gender {
    type Err = FeatureParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "m" => Ok(Gender::Masculine),
            "f" => Ok(Gender::Feminine),
            _ => Err(FeatureParseError::new("gender", s)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum Person {
    First,
    Second,
    #[default]
    Third,
}

impl Person {
    pub fn index(self) -> u8 {
        match self {
            Person::First => 1,
            Person::Second => 2,
            Person::Third => 3,
        }
    }

    pub fn from_index(i: i64) -> Option<Person> {
        match i {
            1 => Some(Person::First),
            2 => Some(Person::Second),
            3 => Some(Person::Third),
            _ => None,
        }
    }
}

/// Supported tenses: present, simple past (passé simple in French) and future.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum Tense {
    #[default]
    #[serde(rename = "p")]
    Present,
    #[serde(rename = "ps")]
    Past,
    #[serde(rename = "f")]
    Future,
}

impl Tense {
    pub const ALL: [Tense; 3] = [Tense::Present, Tense::Past, Tense::Future];

    pub fn code(self) -> &'static str {
        match self {
            Tense::Present => "p",
            Tense::Past => "ps",
            Tense::Future => "f",
        }
    }
}

impl fmt::Display for Tense {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for Tense {
    type Err = FeatureParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "p" => Ok(Tense::Present),
            "ps" => Ok(Tense::Past),
            "f" => Ok(Tense::Future),
            _ => Err(FeatureParseError::new("tense", s)),
        }
    }
}

/// Fully resolved agreement features; unset fields fall back to s, m, 3 and present.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Features {
    pub number: Number,
    pub gender: Gender,
    pub person: Person,
    pub tense: Tense,
}

/// Flat cell key used in inflection tables, e.g. `ps:3s`.
pub fn verb_cell(tense: Tense, person: Person, number: Number) -> String {
    format!("{}:{}{}", tense.code(), person.index(), number.code())
}

pub fn gender_number_cell(gender: Gender, number: Number) -> String {
    format!("{}{}", gender.code(), number.code())
}
