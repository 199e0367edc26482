use serde_json::{Map, Value};
use thiserror::Error;

use crate::features::{Gender, Number, Person, Tense};
use crate::morphology::DateOptions;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OptionError {
    #[error("unknown option {0}")]
    UnknownOption(String),
    #[error("illegal value {value} for option {key}")]
    IllegalValue { key: String, value: String },
}

fn illegal(key: &str, value: &Value) -> OptionError {
    OptionError::IllegalValue {
        key: key.to_string(),
        value: value.to_string(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Interrogative {
    /// yes-or-no question
    YesNo,
    Tag,
}

impl Interrogative {
    pub fn code(self) -> &'static str {
        match self {
            Interrogative::YesNo => "yon",
            Interrogative::Tag => "tag",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Modality {
    /// can / pouvoir
    Possibility,
}

impl Modality {
    pub fn code(self) -> &'static str {
        match self {
            Modality::Possibility => "poss",
        }
    }
}

/// Sentence transformations applied at realization time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SentenceType {
    pub neg: bool,
    pub int: Option<Interrogative>,
    pub pas: bool,
    pub modality: Option<Modality>,
}

impl SentenceType {
    pub fn is_affirmative(&self) -> bool {
        *self == SentenceType::default()
    }

    pub fn is_question(&self) -> bool {
        self.int.is_some()
    }

    /// Merges the keys of a `typ` object into `self`.
    pub fn merge_json(&mut self, value: &Value) -> Result<(), OptionError> {
        let obj = value.as_object().ok_or_else(|| illegal("typ", value))?;
        for (key, v) in obj {
            match key.as_str() {
                "neg" => self.neg = v.as_bool().ok_or_else(|| illegal("typ.neg", v))?,
                "pas" => self.pas = v.as_bool().ok_or_else(|| illegal("typ.pas", v))?,
                "int" => {
                    self.int = match v {
                        Value::Null | Value::Bool(false) => None,
                        Value::String(s) if s == "yon" => Some(Interrogative::YesNo),
                        Value::String(s) if s == "tag" => Some(Interrogative::Tag),
                        _ => return Err(illegal("typ.int", v)),
                    }
                }
                "mod" => {
                    self.modality = match v {
                        Value::Null | Value::Bool(false) => None,
                        Value::String(s) if s == "poss" => Some(Modality::Possibility),
                        _ => return Err(illegal("typ.mod", v)),
                    }
                }
                other => return Err(OptionError::UnknownOption(format!("typ.{other}"))),
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        if let Some(int) = self.int {
            m.insert("int".into(), int.code().into());
        }
        if let Some(modality) = self.modality {
            m.insert("mod".into(), modality.code().into());
        }
        if self.neg {
            m.insert("neg".into(), true.into());
        }
        if self.pas {
            m.insert("pas".into(), true.into());
        }
        Value::Object(m)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bracket {
    Paren,
}

impl Bracket {
    pub fn open(self) -> &'static str {
        "("
    }

    pub fn close(self) -> &'static str {
        ")"
    }
}

/// Options recorded on a constituent. Unset options are `None` so that
/// explicit values (even equal to the default) survive serialization.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Options {
    pub n: Option<Number>,
    pub g: Option<Gender>,
    pub pe: Option<Person>,
    pub t: Option<Tense>,
    pub typ: Option<SentenceType>,
    pub ba: Option<Bracket>,
    pub d_opt: Option<DateOptions>,
    pub nat: Option<bool>,
}

impl Options {
    pub fn is_empty(&self) -> bool {
        *self == Options::default()
    }

    pub fn set(&mut self, key: &str, value: &Value) -> Result<(), OptionError> {
        let as_str = || value.as_str().ok_or_else(|| illegal(key, value));
        match key {
            "n" => self.n = Some(as_str()?.parse().map_err(|_| illegal(key, value))?),
            "g" => self.g = Some(as_str()?.parse().map_err(|_| illegal(key, value))?),
            "t" => self.t = Some(as_str()?.parse().map_err(|_| illegal(key, value))?),
            "pe" => {
                let i = match value {
                    Value::Number(n) => n.as_i64(),
                    Value::String(s) => s.parse().ok(),
                    _ => None,
                };
                self.pe = Some(
                    i.and_then(Person::from_index)
                        .ok_or_else(|| illegal(key, value))?,
                );
            }
            "typ" => {
                let mut typ = self.typ.unwrap_or_default();
                typ.merge_json(value)?;
                self.typ = Some(typ);
            }
            "ba" => match as_str()? {
                "(" => self.ba = Some(Bracket::Paren),
                _ => return Err(illegal(key, value)),
            },
            "nat" => self.nat = Some(value.as_bool().ok_or_else(|| illegal(key, value))?),
            "dOpt" => {
                let obj = value.as_object().ok_or_else(|| illegal(key, value))?;
                let mut opts = self.d_opt.unwrap_or_default();
                let mut touched_date = false;
                for (k, v) in obj {
                    let on = v.as_bool().ok_or_else(|| illegal(&format!("dOpt.{k}"), v))?;
                    if k == "nat" {
                        self.nat = Some(on);
                    } else if opts.set(k, on) {
                        touched_date = true;
                    } else {
                        return Err(OptionError::UnknownOption(format!("dOpt.{k}")));
                    }
                }
                if touched_date {
                    if !opts.any() {
                        return Err(illegal(key, value));
                    }
                    self.d_opt = (opts != DateOptions::default()).then_some(opts);
                }
            }
            other => return Err(OptionError::UnknownOption(other.to_string())),
        }
        Ok(())
    }

    /// Canonical JSON form: only options that were set, keys sorted.
    pub fn to_json(&self) -> Map<String, Value> {
        let mut m = Map::new();
        if let Some(ba) = self.ba {
            m.insert("ba".into(), ba.open().into());
        }
        let mut d = Map::new();
        if let Some(opts) = &self.d_opt {
            for k in DateOptions::KEYS {
                if opts.get(k) == Some(false) {
                    d.insert(k.into(), false.into());
                }
            }
        }
        if let Some(nat) = self.nat {
            d.insert("nat".into(), nat.into());
        }
        if !d.is_empty() {
            m.insert("dOpt".into(), Value::Object(sorted(d)));
        }
        if let Some(g) = self.g {
            m.insert("g".into(), g.code().into());
        }
        if let Some(n) = self.n {
            m.insert("n".into(), n.code().into());
        }
        if let Some(pe) = self.pe {
            m.insert("pe".into(), pe.index().into());
        }
        if let Some(t) = self.t {
            m.insert("t".into(), t.code().into());
        }
        if let Some(typ) = &self.typ {
            m.insert("typ".into(), typ.to_json());
        }
        sorted(m)
    }
}

/// Re-inserts keys in sorted order; a no-op unless serde_json preserves insertion order.
fn sorted(m: Map<String, Value>) -> Map<String, Value> {
    let mut entries: Vec<_> = m.into_iter().collect();
    entries.sort_by(|a, b| a.0.cmp(&b.0));
    entries.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn closed_sets() {
        let mut o = Options::default();
        assert!(o.set("t", &json!("ps")).is_ok());
        assert!(matches!(
            o.set("t", &json!("x")),
            Err(OptionError::IllegalValue { .. })
        ));
        assert!(matches!(
            o.set("colour", &json!("red")),
            Err(OptionError::UnknownOption(_))
        ));
        assert!(o.set("ba", &json!("[")).is_err());
        assert!(o.set("pe", &json!(4)).is_err());
        assert!(o.set("typ", &json!({"int": "wh"})).is_err());
        assert!(o.set("typ", &json!({"exc": true})).is_err());
    }

    #[test]
    fn later_sets_overwrite() {
        let mut o = Options::default();
        o.set("n", &json!("p")).unwrap();
        o.set("n", &json!("s")).unwrap();
        assert_eq!(o.n, Some(Number::Singular));
    }

    #[test]
    fn typ_merges() {
        let mut o = Options::default();
        o.set("typ", &json!({"neg": true})).unwrap();
        o.set("typ", &json!({"int": "tag"})).unwrap();
        let typ = o.typ.unwrap();
        assert!(typ.neg);
        assert_eq!(typ.int, Some(Interrogative::Tag));
    }

    #[test]
    fn date_options_need_one_toggle() {
        let mut o = Options::default();
        let all_off: Map<String, Value> = DateOptions::KEYS
            .iter()
            .map(|k| (k.to_string(), Value::Bool(false)))
            .collect();
        assert!(o.set("dOpt", &Value::Object(all_off)).is_err());
        o.set("dOpt", &json!({"hour": false, "minute": false})).unwrap();
        assert!(!o.d_opt.unwrap().hour);
        o.set("dOpt", &json!({"nat": true})).unwrap();
        assert_eq!(o.nat, Some(true));
    }

    #[test]
    fn json_omits_unset() {
        assert!(Options::default().to_json().is_empty());
        let mut o = Options::default();
        o.set("dOpt", &json!({"second": false})).unwrap();
        o.set("n", &json!("p")).unwrap();
        assert_eq!(
            Value::Object(o.to_json()),
            json!({"dOpt": {"second": false}, "n": "p"})
        );
    }
}
