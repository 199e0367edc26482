//! Parallel bilingual event reports.
//!
//! Content is selected once in a [`ReportSpec`] and realized per language,
//! either with word tables indexed by language (same phrase structure in
//! both languages) or through a [`LanguageRealizer`] whose implementations
//! may build different structures.

use chrono::{Datelike, NaiveDateTime};

use crate::engine::Engine;
use crate::features::{Gender, Language, Tense};
use crate::lexicon::{LexEntry, LexiconError, Pos, PosRecord};
use crate::morphology::DateOptions;
use crate::realizer::Realization;
use crate::syntax::{Arg, Bracket, Builder, Constituent};

/// Tense of an event relative to a reference day.
pub fn tense_for(date: &NaiveDateTime, reference: &NaiveDateTime) -> Tense {
    let (o, ref_o) = (date.num_days_from_ce(), reference.num_days_from_ce());
    if o == ref_o {
        Tense::Present
    } else if o > ref_o {
        Tense::Future
    } else {
        Tense::Past
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Participant {
    pub name: String,
    pub gender: Gender,
}

impl Participant {
    pub fn new(name: &str, gender: Gender) -> Self {
        Participant {
            name: name.to_string(),
            gender,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Event {
    pub en: String,
    pub fr: String,
}

impl Event {
    pub fn lemma(&self, lang: Language) -> &str {
        match lang {
            Language::En => &self.en,
            Language::Fr => &self.fr,
        }
    }
}

/// Language-independent content of one report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportSpec {
    pub event: Event,
    pub participants: Vec<Participant>,
    pub date: NaiveDateTime,
    /// reference day deciding the tense; never the wall clock
    pub today: NaiveDateTime,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Style {
    WordTable,
    Interface,
}

impl std::str::FromStr for Style {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "word-table" => Ok(Style::WordTable),
            "interface" => Ok(Style::Interface),
            other => Err(format!("unknown style {other:?}")),
        }
    }
}

/// Adds every participant as an invariable proper noun to both lexicons.
pub fn register_participants(engine: &mut Engine, participants: &[Participant]) -> Result<(), LexiconError> {
    for lang in Language::ALL {
        for p in participants {
            let entry = LexEntry::single(Pos::N, PosRecord::new("nI").with_gender(p.gender));
            engine.lexicon_mut(lang).add_to_lexicon(&p.name, entry)?;
        }
    }
    Ok(())
}

pub fn report_date_options() -> DateOptions {
    DateOptions {
        minute: false,
        second: false,
        ..Default::default()
    }
}

/// Words shared by both languages' report structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WordTable {
    pub conj: &'static str,
    pub prep: &'static str,
    pub det: &'static str,
    pub copula: &'static str,
    pub attribute: &'static str,
    pub individual: &'static str,
}

impl WordTable {
    pub fn for_language(lang: Language) -> Self {
        match lang {
            Language::En => WordTable {
                conj: "and",
                prep: "at",
                det: "a",
                copula: "be",
                attribute: "present",
                individual: "person",
            },
            Language::Fr => WordTable {
                conj: "et",
                prep: "à",
                det: "un",
                copula: "être",
                attribute: "présent",
                individual: "personne",
            },
        }
    }
}

fn names(b: Builder, persons: &[Participant]) -> Arg {
    persons.iter().map(|p| b.n(&p.name)).collect::<Vec<_>>().into()
}

/// Report built from common nouns with an explicit tense: every person gets
/// an indefinite determiner and the count is written in digits.
pub fn noun_report(
    b: Builder,
    event: &str,
    persons: &[&str],
    date: NaiveDateTime,
    tense: Tense,
) -> Constituent {
    let w = WordTable::for_language(b.lang());
    let meeting = b.pp([b.p(w.prep), b.np([b.d(w.det), b.n(event)])]);
    let people: Vec<Constituent> = persons.iter().map(|p| b.np([b.d(w.det), b.n(p)])).collect();
    b.s([
        b.cp(vec![b.c(w.conj).into(), people.into()] as Vec<Arg>),
        b.np([b.no(persons.len() as i64), b.n(w.individual)])
            .ba(Bracket::Paren),
        b.vp([
            b.v(w.copula).t(tense),
            b.a(w.attribute),
            meeting,
            b.dt(date).d_opt(DateOptions::date_only()),
        ]),
    ])
}

/// Same phrase structure in both languages, only the words differ.
pub fn word_table_report(lang: Language, spec: &ReportSpec) -> Constituent {
    let b = Builder::new(lang);
    let w = WordTable::for_language(lang);
    let meeting = b.pp([b.p(w.prep), b.np([b.d(w.det), b.n(spec.event.lemma(lang))])]);
    b.s([
        b.cp(vec![b.c(w.conj).into(), names(b, &spec.participants)] as Vec<Arg>),
        b.np([b.no(spec.participants.len() as i64).nat(), b.n(w.individual)])
            .ba(Bracket::Paren),
        b.vp([
            b.v(w.copula),
            b.a(w.attribute),
            meeting,
            b.dt(spec.date).d_opt(report_date_options()),
        ])
        .t(tense_for(&spec.date, &spec.today)),
    ])
}

/// Language-dependent choices of the interface style.
pub trait LanguageRealizer {
    fn language(&self) -> Language;

    fn builder(&self) -> Builder {
        Builder::new(self.language())
    }

    fn conjunction(&self) -> Constituent;

    fn individual(&self) -> Constituent;

    fn meeting(&self, event: &str) -> Constituent;

    fn attend(&self, meeting: Constituent) -> Constituent;

    /// Shared structure; the tense goes on the sentence.
    fn report(&self, spec: &ReportSpec) -> Constituent {
        let b = self.builder();
        let lang = self.language();
        b.s([
            b.cp(vec![self.conjunction().into(), names(b, &spec.participants)] as Vec<Arg>),
            b.np([b.no(spec.participants.len() as i64).nat(), self.individual()])
                .ba(Bracket::Paren),
            self.attend(self.meeting(spec.event.lemma(lang))),
            b.dt(spec.date).d_opt(report_date_options()),
        ])
        .t(tense_for(&spec.date, &spec.today))
    }
}

/// "attend the assembly"
pub struct English;

impl LanguageRealizer for English {
    fn language(&self) -> Language {
        Language::En
    }

    fn conjunction(&self) -> Constituent {
        self.builder().c("and")
    }

    fn individual(&self) -> Constituent {
        self.builder().n("person")
    }

    fn meeting(&self, event: &str) -> Constituent {
        let b = self.builder();
        b.np([b.d("the"), b.n(event)])
    }

    fn attend(&self, meeting: Constituent) -> Constituent {
        let b = self.builder();
        b.vp([b.v("attend"), meeting])
    }
}

/// "be present at an assembly", the word-table phrasing.
pub struct EnglishCopula;

impl LanguageRealizer for EnglishCopula {
    fn language(&self) -> Language {
        Language::En
    }

    fn conjunction(&self) -> Constituent {
        self.builder().c("and")
    }

    fn individual(&self) -> Constituent {
        self.builder().n("person")
    }

    fn meeting(&self, event: &str) -> Constituent {
        let b = self.builder();
        b.np([b.d("a"), b.n(event)])
    }

    fn attend(&self, meeting: Constituent) -> Constituent {
        let b = self.builder();
        b.vp([b.v("be"), b.a("present"), b.pp([b.p("at"), meeting])])
    }
}

/// "être présent à la réunion"
pub struct Francais;

impl LanguageRealizer for Francais {
    fn language(&self) -> Language {
        Language::Fr
    }

    fn conjunction(&self) -> Constituent {
        self.builder().c("et")
    }

    fn individual(&self) -> Constituent {
        self.builder().n("individu")
    }

    fn meeting(&self, event: &str) -> Constituent {
        let b = self.builder();
        b.np([b.d("le"), b.n(event)])
    }

    fn attend(&self, meeting: Constituent) -> Constituent {
        let b = self.builder();
        b.vp([b.v("être"), b.a("présent"), b.pp([b.p("à"), meeting])])
    }
}

pub fn interface_realizer(lang: Language) -> &'static dyn LanguageRealizer {
    match lang {
        Language::En => &English,
        Language::Fr => &Francais,
    }
}

pub fn report_tree(spec: &ReportSpec, style: Style, lang: Language) -> Constituent {
    match style {
        Style::WordTable => word_table_report(lang, spec),
        Style::Interface => interface_realizer(lang).report(spec),
    }
}

/// Participants must already be in both lexicons, see
/// [`register_participants`]; missing names come back as warnings.
pub fn generate_report(engine: &Engine, spec: &ReportSpec, style: Style, lang: Language) -> Realization {
    engine.realize(&report_tree(spec, style, lang))
}

#[cfg(test)]
mod tests {
    use super::*;
    use chrono::NaiveDate;

    fn at(y: i32, m: u32, d: u32, h: u32) -> NaiveDateTime {
        NaiveDate::from_ymd_opt(y, m, d)
            .unwrap()
            .and_hms_opt(h, 0, 0)
            .unwrap()
    }

    #[test]
    fn tense_compares_days_only() {
        let today = at(2023, 9, 26, 17);
        assert_eq!(tense_for(&at(2023, 9, 26, 1), &today), Tense::Present);
        assert_eq!(tense_for(&at(2023, 9, 27, 0), &today), Tense::Future);
        assert_eq!(tense_for(&at(2023, 9, 25, 23), &today), Tense::Past);
    }

    #[test]
    fn style_names() {
        assert_eq!("interface".parse::<Style>(), Ok(Style::Interface));
        assert!("table".parse::<Style>().is_err());
    }
}
