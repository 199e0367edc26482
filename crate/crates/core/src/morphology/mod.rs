//! Word forms: table-driven inflection, spelled-out numbers, worded dates and
//! the subject-pronoun paradigm.

mod dates;
mod numbers;

pub use dates::{format_date, DateOptions, MONTHS_EN, MONTHS_FR, WEEKDAYS_EN, WEEKDAYS_FR};
pub use numbers::{number_to_words, MAX_SPELLED};

use thiserror::Error;

use crate::features::{gender_number_cell, verb_cell, Gender, Language, Number, Person, Tense};
use crate::lexicon::{Lexicon, LexiconError, Pos};

#[derive(Debug, Error)]
pub enum MorphError {
    #[error(transparent)]
    Lookup(#[from] LexiconError),
    #[error("«{lemma}» has no {cell} form in table {table}")]
    MissingCell {
        lemma: String,
        table: String,
        cell: String,
    },
    #[error("{0} is outside the spelled-out range")]
    OutOfRange(i64),
}

/// Form of `lemma` as `pos` for one table cell, irregular forms taking precedence.
pub fn form(lex: &Lexicon, lemma: &str, pos: Pos, cell: &str) -> Result<String, MorphError> {
    let record = lex.lookup(lemma, pos)?;
    if let Some(irregular) = record.irr.get(cell) {
        return Ok(irregular.clone());
    }
    lex.table(&record.tab)
        .and_then(|t| t.apply(lemma, cell))
        .ok_or_else(|| MorphError::MissingCell {
            lemma: lemma.to_string(),
            table: record.tab.clone(),
            cell: cell.to_string(),
        })
}

pub fn inflect_noun(lex: &Lexicon, lemma: &str, number: Number) -> Result<String, MorphError> {
    form(lex, lemma, Pos::N, number.code())
}

pub fn inflect_adjective(
    lex: &Lexicon,
    lemma: &str,
    gender: Gender,
    number: Number,
) -> Result<String, MorphError> {
    form(lex, lemma, Pos::A, &gender_number_cell(gender, number))
}

/// May return an empty string: English "a" has no plural form.
pub fn inflect_determiner(
    lex: &Lexicon,
    lemma: &str,
    gender: Gender,
    number: Number,
) -> Result<String, MorphError> {
    form(lex, lemma, Pos::D, &gender_number_cell(gender, number))
}

/// Finite verb form as tokens. English future is analytic (`will` + base);
/// every other supported cell is a single token.
pub fn conjugate(
    lex: &Lexicon,
    lemma: &str,
    tense: Tense,
    person: Person,
    number: Number,
) -> Result<Vec<String>, MorphError> {
    let cell = form(lex, lemma, Pos::V, &verb_cell(tense, person, number))?;
    match (lex.language(), tense) {
        (Language::En, Tense::Future) => Ok(vec!["will".to_string(), cell]),
        _ => Ok(vec![cell]),
    }
}

pub fn infinitive(lex: &Lexicon, lemma: &str) -> Result<String, MorphError> {
    form(lex, lemma, Pos::V, "b")
}

/// Past participle; in French it agrees in gender and number.
pub fn past_participle(
    lex: &Lexicon,
    lemma: &str,
    gender: Gender,
    number: Number,
) -> Result<String, MorphError> {
    let mut pp = form(lex, lemma, Pos::V, "pp")?;
    if lex.language() == Language::Fr {
        if gender == Gender::Feminine {
            pp.push('e');
        }
        if number == Number::Plural && !pp.ends_with('s') {
            pp.push('s');
        }
    }
    Ok(pp)
}

const PRONOUNS_EN: [[&str; 3]; 2] = [["I", "you", "he"], ["we", "you", "they"]];
const PRONOUNS_FR: [[&str; 3]; 2] = [["je", "tu", "il"], ["nous", "vous", "ils"]];

/// Third-person subject pronoun.
pub fn pronoun_for(gender: Gender, number: Number, language: Language) -> &'static str {
    personal_pronoun(Person::Third, number, gender, language)
}

pub fn personal_pronoun(person: Person, number: Number, gender: Gender, language: Language) -> &'static str {
    let row = match number {
        Number::Singular => 0,
        Number::Plural => 1,
    };
    let col = person.index() as usize - 1;
    let base = match language {
        Language::En => PRONOUNS_EN[row][col],
        Language::Fr => PRONOUNS_FR[row][col],
    };
    match (language, person, number, gender) {
        (Language::En, Person::Third, Number::Singular, Gender::Feminine) => "she",
        (Language::Fr, Person::Third, Number::Singular, Gender::Feminine) => "elle",
        (Language::Fr, Person::Third, Number::Plural, Gender::Feminine) => "elles",
        _ => base,
    }
}

/// Features carried by a personal subject pronoun lemma, if it is one.
pub fn pronoun_features(lemma: &str, language: Language) -> Option<(Person, Number, Option<Gender>)> {
    use Gender::*;
    use Number::*;
    use Person::*;
    let found = match (language, lemma) {
        (Language::En, "I") => (First, Singular, None),
        (Language::En, "you") => (Second, Singular, None),
        (Language::En, "he") => (Third, Singular, Some(Masculine)),
        (Language::En, "she") => (Third, Singular, Some(Feminine)),
        (Language::En, "we") => (First, Plural, None),
        (Language::En, "they") => (Third, Plural, None),
        (Language::Fr, "je") => (First, Singular, None),
        (Language::Fr, "tu") => (Second, Singular, None),
        (Language::Fr, "il") => (Third, Singular, Some(Masculine)),
        (Language::Fr, "elle") => (Third, Singular, Some(Feminine)),
        (Language::Fr, "nous") => (First, Plural, None),
        (Language::Fr, "vous") => (Second, Plural, None),
        (Language::Fr, "ils") => (Third, Plural, Some(Masculine)),
        (Language::Fr, "elles") => (Third, Plural, Some(Feminine)),
        _ => return None,
    };
    Some(found)
}
