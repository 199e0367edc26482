use std::path::Path;

use crate::features::Language;
use crate::lexicon::{load_lexicon, LexEntry, Lexicon, LexiconError};
use crate::realizer::{self, Realization};
use crate::syntax::{Builder, Constituent};

pub const LEXICON_DIR_VAR: &str = "BIREALIZE_LEXICON_DIR";

const LEXICON_EN: &str = include_str!("../data/lexicon-en.json");
const RULES_EN: &str = include_str!("../data/rules-en.json");
const LEXICON_FR: &str = include_str!("../data/lexicon-fr.json");
const RULES_FR: &str = include_str!("../data/rules-fr.json");

#[derive(Debug, thiserror::Error)]
pub enum EngineError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Lexicon(#[from] LexiconError),
}

/// Both lexicons plus the current language context. Mutable during setup;
/// wrap in an `Arc` to share read-only.
#[derive(Debug, Clone)]
pub struct Engine {
    en: Lexicon,
    fr: Lexicon,
    current: Language,
}

impl Engine {
    pub fn new(en: Lexicon, fr: Lexicon) -> Self {
        Engine {
            en,
            fr,
            current: Language::En,
        }
    }

    /// Engine over the lexicons shipped with the crate.
    pub fn with_fixtures() -> Self {
        let en = load_lexicon(Language::En, LEXICON_EN.as_bytes(), RULES_EN.as_bytes())
            .expect("shipped English lexicon is valid");
        let fr = load_lexicon(Language::Fr, LEXICON_FR.as_bytes(), RULES_FR.as_bytes())
            .expect("shipped French lexicon is valid");
        Engine::new(en, fr)
    }

    /// Reads `lexicon-{en,fr}.json` and `rules-{en,fr}.json` from `dir`.
    pub fn from_dir(dir: &Path) -> Result<Self, EngineError> {
        let read = |name: String| {
            let path = dir.join(name);
            std::fs::read(&path).map_err(|source| EngineError::Io {
                path: path.display().to_string(),
                source,
            })
        };
        let mut lexicons = Vec::new();
        for lang in Language::ALL {
            let lex = read(format!("lexicon-{}.json", lang.code()))?;
            let rules = read(format!("rules-{}.json", lang.code()))?;
            lexicons.push(load_lexicon(lang, &lex, &rules)?);
        }
        let fr = lexicons.pop().expect("two languages");
        let en = lexicons.pop().expect("two languages");
        Ok(Engine::new(en, fr))
    }

    /// Uses the directory named by `BIREALIZE_LEXICON_DIR` when set.
    pub fn from_env() -> Result<Self, EngineError> {
        match std::env::var_os(LEXICON_DIR_VAR) {
            Some(dir) => Engine::from_dir(Path::new(&dir)),
            None => Ok(Engine::with_fixtures()),
        }
    }

    pub fn load_en(&mut self) -> Builder {
        self.current = Language::En;
        self.builder()
    }

    pub fn load_fr(&mut self) -> Builder {
        self.current = Language::Fr;
        self.builder()
    }

    pub fn language(&self) -> Language {
        self.current
    }

    /// Builder stamping the current language.
    pub fn builder(&self) -> Builder {
        Builder::new(self.current)
    }

    pub fn lexicon(&self, lang: Language) -> &Lexicon {
        match lang {
            Language::En => &self.en,
            Language::Fr => &self.fr,
        }
    }

    pub fn lexicon_mut(&mut self, lang: Language) -> &mut Lexicon {
        match lang {
            Language::En => &mut self.en,
            Language::Fr => &mut self.fr,
        }
    }

    /// Adds to the lexicon of the current language.
    pub fn add_to_lexicon(&mut self, lemma: &str, entry: LexEntry) -> Result<(), LexiconError> {
        let lang = self.current;
        self.lexicon_mut(lang).add_to_lexicon(lemma, entry)
    }

    pub fn realize(&self, tree: &Constituent) -> Realization {
        realizer::realize(self, tree)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexicon::{Pos, PosRecord};

    #[test]
    fn fixtures_load() {
        let e = Engine::with_fixtures();
        assert!(e.lexicon(Language::En).len() >= 80);
        assert!(e.lexicon(Language::Fr).len() >= 80);
        assert!(e.lexicon(Language::Fr).lookup("chat", Pos::N).is_ok());
    }

    #[test]
    fn context_switch_stamps_builders() {
        let mut e = Engine::with_fixtures();
        assert_eq!(e.load_fr().n("chat").lang(), Language::Fr);
        assert_eq!(e.load_en().n("cat").lang(), Language::En);
    }

    #[test]
    fn add_goes_to_current_language() {
        let mut e = Engine::with_fixtures();
        e.load_fr();
        e.add_to_lexicon(
            "Alice",
            LexEntry::single(
                Pos::N,
                PosRecord::new("nI").with_gender(crate::features::Gender::Feminine),
            ),
        )
        .unwrap();
        assert!(e.lexicon(Language::Fr).contains("Alice"));
        assert!(!e.lexicon(Language::En).contains("Alice"));
    }

    #[test]
    fn from_dir_round_trips() {
        let e = Engine::with_fixtures();
        let dir = std::env::temp_dir().join(format!("birealize-engine-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        for lang in Language::ALL {
            let (lex, rules) = e.lexicon(lang).to_json();
            std::fs::write(dir.join(format!("lexicon-{}.json", lang.code())), lex).unwrap();
            std::fs::write(dir.join(format!("rules-{}.json", lang.code())), rules).unwrap();
        }
        let loaded = Engine::from_dir(&dir).unwrap();
        std::fs::remove_dir_all(&dir).ok();
        assert_eq!(loaded.lexicon(Language::En), e.lexicon(Language::En));
        assert_eq!(loaded.lexicon(Language::Fr), e.lexicon(Language::Fr));
        assert!(matches!(
            Engine::from_dir(Path::new("/nonexistent/birealize")),
            Err(EngineError::Io { .. })
        ));
    }
}
