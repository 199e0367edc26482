//! Pattern files.
//!
//! A pattern pairs a French and an English template tree. In a template,
//! `"$name"` in a lemma or option value is replaced by a word parameter and
//! `{"param": "name", "options": {...}}` by a fragment tree. Parameter slots
//! list `[fr, en]` pairs; a pair member starting with `@` names a fragment
//! and a bare string in a slot splices a shared list.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde::Deserialize;
use serde_json::{Map, Value};

use crate::features::Language;
use crate::interchange::{tree_from_value, tree_to_value};
use crate::syntax::{Constituent, Param, SyntaxError, Template};

use super::DrillError;

pub const PATTERNS_JSON: &str = include_str!("../../data/patterns.json");

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SlotValue {
    Word(String),
    Fragment(String),
}

impl SlotValue {
    fn parse(s: &str) -> Self {
        match s.strip_prefix('@') {
            Some(name) => SlotValue::Fragment(name.to_string()),
            None => SlotValue::Word(s.to_string()),
        }
    }
}

/// One translation pair of a slot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pair {
    pub fr: SlotValue,
    pub en: SlotValue,
}

impl Pair {
    pub fn side(&self, lang: Language) -> &SlotValue {
        match lang {
            Language::Fr => &self.fr,
            Language::En => &self.en,
        }
    }
}

#[derive(Debug, Clone)]
pub struct DrillPattern {
    pub id: String,
    pub level: u8,
    /// whether the passive variation applies
    pub passive: bool,
    pub slots: Vec<Vec<Pair>>,
    fr: Template,
    en: Template,
    lemma_slots: [BTreeSet<usize>; 2],
    fragments: Arc<Fragments>,
}

impl DrillPattern {
    pub fn template(&self, lang: Language) -> &Template {
        match lang {
            Language::Fr => &self.fr,
            Language::En => &self.en,
        }
    }

    pub fn param(&self, value: &SlotValue, lang: Language) -> Param {
        match value {
            SlotValue::Word(w) => Param::word(w),
            SlotValue::Fragment(name) => {
                let tree = self.fragments.get(lang, name).expect("checked at load").clone();
                Param::tree(move || tree.clone())
            }
        }
    }

    /// Lemmas a slot value contributes to the given side, used as distractors.
    pub fn lemmas(&self, slot: usize, value: &SlotValue, lang: Language) -> Vec<String> {
        match value {
            SlotValue::Word(w) if self.lemma_slots[lang_index(lang)].contains(&slot) => vec![w.clone()],
            SlotValue::Word(_) => Vec::new(),
            SlotValue::Fragment(name) => self
                .fragments
                .get(lang, name)
                .map(|t| {
                    t.walk()
                        .into_iter()
                        .filter_map(|c| c.lemma().map(str::to_string))
                        .collect()
                })
                .unwrap_or_default(),
        }
    }
}

fn lang_index(lang: Language) -> usize {
    match lang {
        Language::Fr => 0,
        Language::En => 1,
    }
}

#[derive(Debug, Default)]
struct Fragments {
    fr: BTreeMap<String, Constituent>,
    en: BTreeMap<String, Constituent>,
}

impl Fragments {
    fn get(&self, lang: Language, name: &str) -> Option<&Constituent> {
        match lang {
            Language::Fr => self.fr.get(name),
            Language::En => self.en.get(name),
        }
    }
}

#[derive(Deserialize)]
struct FileDoc {
    #[serde(default)]
    fragments: BTreeMap<Language, BTreeMap<String, Value>>,
    #[serde(default)]
    lists: BTreeMap<String, Vec<[String; 2]>>,
    patterns: Vec<PatternDoc>,
}

#[derive(Deserialize)]
struct PatternDoc {
    id: String,
    level: u8,
    #[serde(default = "yes")]
    passive: bool,
    fr: TemplateDoc,
    en: TemplateDoc,
    params: Vec<SlotDoc>,
}

fn yes() -> bool {
    true
}

#[derive(Deserialize)]
struct TemplateDoc {
    params: Vec<String>,
    tree: Value,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum SlotDoc {
    List(String),
    Items(Vec<ItemDoc>),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ItemDoc {
    Pair([String; 2]),
    List(String),
}

pub fn load_patterns(json: &str) -> Result<Vec<DrillPattern>, DrillError> {
    let doc: FileDoc = serde_json::from_str(json).map_err(|e| DrillError::Load(e.to_string()))?;
    let mut fragments = Fragments::default();
    for (lang, map) in doc.fragments {
        for (name, tree) in map {
            let tree = with_lang(tree, lang);
            let c = tree_from_value(&tree).map_err(|e| DrillError::Load(format!("fragment {name}: {e}")))?;
            match lang {
                Language::Fr => fragments.fr.insert(name, c),
                Language::En => fragments.en.insert(name, c),
            };
        }
    }
    let fragments = Arc::new(fragments);
    doc.patterns
        .into_iter()
        .map(|p| pattern(p, &doc.lists, &fragments))
        .collect()
}

fn with_lang(mut tree: Value, lang: Language) -> Value {
    if let Value::Object(m) = &mut tree {
        m.insert("lang".into(), lang.code().into());
    }
    tree
}

fn pattern(
    doc: PatternDoc,
    lists: &BTreeMap<String, Vec<[String; 2]>>,
    fragments: &Arc<Fragments>,
) -> Result<DrillPattern, DrillError> {
    let id = doc.id.clone();
    let err = |m: String| DrillError::Load(format!("pattern {id}: {m}"));
    let list = |name: &str| lists.get(name).ok_or_else(|| err(format!("unknown list {name}")));
    let mut slots = Vec::new();
    for slot in &doc.params {
        let mut pairs = Vec::new();
        let mut push = |raw: &[[String; 2]]| {
            pairs.extend(raw.iter().map(|[fr, en]| Pair {
                fr: SlotValue::parse(fr),
                en: SlotValue::parse(en),
            }))
        };
        match slot {
            SlotDoc::List(name) => push(list(name)?),
            SlotDoc::Items(items) => {
                for item in items {
                    match item {
                        ItemDoc::Pair(p) => push(std::slice::from_ref(p)),
                        ItemDoc::List(name) => push(list(name)?),
                    }
                }
            }
        }
        if pairs.is_empty() {
            return Err(err("empty parameter slot".into()));
        }
        slots.push(pairs);
    }
    for (lang, t) in [(Language::Fr, &doc.fr), (Language::En, &doc.en)] {
        if t.params.len() != slots.len() {
            return Err(err(format!(
                "{} template has {} parameters for {} slots",
                lang.code(),
                t.params.len(),
                slots.len()
            )));
        }
        for pair in slots.iter().flatten() {
            if let SlotValue::Fragment(name) = pair.side(lang) {
                if fragments.get(lang, name).is_none() {
                    return Err(err(format!("unknown {} fragment {name}", lang.code())));
                }
            }
        }
    }
    let lemma_slots = [lemma_slots(&doc.fr), lemma_slots(&doc.en)];
    let p = DrillPattern {
        id: doc.id,
        level: doc.level,
        passive: doc.passive,
        slots,
        fr: template(doc.fr, Language::Fr),
        en: template(doc.en, Language::En),
        lemma_slots,
        fragments: fragments.clone(),
    };
    for lang in Language::ALL {
        let args: Vec<Param> = p.slots.iter().map(|s| p.param(s[0].side(lang), lang)).collect();
        p.template(lang)
            .instantiate(&args)
            .map_err(|e| err(format!("{} template: {e}", lang.code())))?;
    }
    Ok(p)
}

/// Slot indices whose words are substituted as lemmas.
fn lemma_slots(t: &TemplateDoc) -> BTreeSet<usize> {
    fn walk(v: &Value, names: &[String], out: &mut BTreeSet<usize>) {
        match v {
            Value::Object(m) => {
                if let Some(Value::String(s)) = m.get("lemma") {
                    if let Some(i) = s
                        .strip_prefix('$')
                        .and_then(|n| names.iter().position(|p| p == n))
                    {
                        out.insert(i);
                    }
                }
                m.values().for_each(|c| walk(c, names, out));
            }
            Value::Array(items) => items.iter().for_each(|c| walk(c, names, out)),
            _ => {}
        }
    }
    let mut out = BTreeSet::new();
    walk(&t.tree, &t.params, &mut out);
    out
}

fn template(doc: TemplateDoc, lang: Language) -> Template {
    let tree = with_lang(doc.tree, lang);
    let names = doc.params.clone();
    Template::new(doc.params, move |args| {
        let bound: BTreeMap<&str, &Param> = names.iter().map(String::as_str).zip(args).collect();
        let v = substitute(&tree, &bound)?;
        tree_from_value(&v).map_err(|e| SyntaxError::Template(e.to_string()))
    })
}

fn substitute(v: &Value, args: &BTreeMap<&str, &Param>) -> Result<Value, SyntaxError> {
    let lookup = |name: &str| {
        args.get(name)
            .copied()
            .ok_or_else(|| SyntaxError::Template(format!("unknown parameter {name}")))
    };
    Ok(match v {
        Value::String(s) => match s.strip_prefix('$') {
            Some(name) => match lookup(name)? {
                Param::Word(w) => Value::String(w.clone()),
                Param::Tree(_) => {
                    return Err(SyntaxError::Template(format!("{name} is a phrase, not a word")))
                }
            },
            None => v.clone(),
        },
        Value::Array(items) => Value::Array(
            items
                .iter()
                .map(|c| substitute(c, args))
                .collect::<Result<_, _>>()?,
        ),
        Value::Object(m) => match m.get("param").and_then(Value::as_str) {
            Some(name) => {
                let tree = lookup(name)?
                    .build()
                    .ok_or_else(|| SyntaxError::Template(format!("{name} is a word, not a phrase")))?;
                let mut node = match tree_to_value(&tree) {
                    Value::Object(n) => n,
                    _ => unreachable!("trees serialize to objects"),
                };
                if let Some(Value::Object(extra)) = m.get("options") {
                    let extra = substitute(&Value::Object(extra.clone()), args)?;
                    let opts = node.entry("options").or_insert_with(|| Value::Object(Map::new()));
                    if let (Value::Object(o), Value::Object(e)) = (opts, extra) {
                        o.extend(e);
                    }
                }
                Value::Object(node)
            }
            None => Value::Object(
                m.iter()
                    .map(|(k, c)| Ok((k.clone(), substitute(c, args)?)))
                    .collect::<Result<_, SyntaxError>>()?,
            ),
        },
        _ => v.clone(),
    })
}
