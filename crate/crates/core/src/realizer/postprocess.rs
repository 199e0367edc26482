use std::collections::HashSet;
use std::sync::OnceLock;

use crate::features::Language;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Word,
    /// passed through untouched by elision and contraction
    Verbatim,
    Punct,
    OpenBracket,
    CloseBracket,
    /// glued to the previous token: `-t-il`
    Hyphenated,
    /// elided word glued to the next token: `l'`
    Elided,
    SentenceStart,
    Terminator,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub text: String,
    pub lang: Language,
    pub kind: TokenKind,
}

impl Token {
    pub fn new(text: impl Into<String>, lang: Language, kind: TokenKind) -> Self {
        Token {
            text: text.into(),
            lang,
            kind,
        }
    }

    pub fn word(text: impl Into<String>, lang: Language) -> Self {
        Token::new(text, lang, TokenKind::Word)
    }

    pub fn punct(text: impl Into<String>, lang: Language) -> Self {
        Token::new(text, lang, TokenKind::Punct)
    }

    fn is_marker(&self) -> bool {
        matches!(self.kind, TokenKind::SentenceStart | TokenKind::Terminator)
    }

    fn is_lexical(&self) -> bool {
        matches!(
            self.kind,
            TokenKind::Word | TokenKind::Verbatim | TokenKind::Elided
        )
    }
}

const ELIDABLE: [&str; 10] = ["le", "la", "de", "ne", "que", "je", "me", "te", "se", "ce"];

fn mute_h() -> &'static HashSet<String> {
    static WORDS: OnceLock<HashSet<String>> = OnceLock::new();
    WORDS.get_or_init(|| {
        serde_json::from_str::<Vec<String>>(include_str!("../../data/mute-h-fr.json"))
            .expect("shipped mute-h list is valid")
            .into_iter()
            .collect()
    })
}

fn starts_with_french_vowel(word: &str) -> bool {
    let lower = word.to_lowercase();
    match lower.chars().next() {
        Some(c) if "aeiouàâäéèêëîïôöùûü".contains(c) => true,
        Some('h') => {
            let bare = lower.trim_end_matches(|c: char| !c.is_alphabetic());
            mute_h().contains(bare)
        }
        _ => false,
    }
}

fn starts_with_english_vowel(word: &str) -> bool {
    word.chars().next().is_some_and(|c| "aeiouAEIOU".contains(c))
}

/// Index of the next lexical token after `i`, skipping brackets.
fn next_lexical(tokens: &[Token], i: usize) -> Option<usize> {
    tokens[i + 1..]
        .iter()
        .position(|t| !matches!(t.kind, TokenKind::OpenBracket | TokenKind::CloseBracket))
        .map(|off| i + 1 + off)
        .filter(|&j| tokens[j].is_lexical())
}

fn contract(first: &str, article: &str) -> Option<&'static str> {
    Some(match (first, article) {
        ("de", "le") => "du",
        ("de", "les") => "des",
        ("à", "le") => "au",
        ("à", "les") => "aux",
        _ => return None,
    })
}

/// Contraction, elision and a/an selection, in place.
fn rewrite(tokens: &mut Vec<Token>) {
    let mut i = 0;
    while i < tokens.len() {
        if tokens[i].kind != TokenKind::Word || tokens[i].text.is_empty() {
            i += 1;
            continue;
        }
        let Some(j) = next_lexical(tokens, i) else {
            i += 1;
            continue;
        };
        let next_text = tokens[j].text.clone();
        match tokens[i].lang {
            Language::Fr => {
                let lower = tokens[i].text.to_lowercase();
                let article_elides = |k: usize| {
                    next_lexical(tokens, k).is_some_and(|m| starts_with_french_vowel(&tokens[m].text))
                };
                if tokens[j].kind == TokenKind::Word && tokens[j].lang == Language::Fr && j == i + 1 {
                    if let Some(fused) = contract(&lower, &next_text) {
                        if next_text == "les" || !article_elides(j) {
                            tokens[i].text = recase(&tokens[i].text, fused);
                            tokens.remove(j);
                            continue;
                        }
                    }
                }
                if ELIDABLE.contains(&lower.as_str()) && starts_with_french_vowel(&next_text) {
                    let mut elided: String = tokens[i].text.chars().take(1).collect();
                    elided.push('\'');
                    tokens[i].text = elided;
                    tokens[i].kind = TokenKind::Elided;
                }
            }
            Language::En => {
                if tokens[i].text.eq_ignore_ascii_case("a") && starts_with_english_vowel(&next_text) {
                    let first = tokens[i].text.clone();
                    tokens[i].text = format!("{first}n");
                }
            }
        }
        i += 1;
    }
}

fn recase(original: &str, replacement: &str) -> String {
    if original.chars().next().is_some_and(char::is_uppercase) {
        capitalize(replacement)
    } else {
        replacement.to_string()
    }
}

pub(crate) fn capitalize(word: &str) -> String {
    let mut chars = word.chars();
    match chars.next() {
        Some(first) => first.to_uppercase().chain(chars).collect(),
        None => String::new(),
    }
}

fn glues_left(t: &Token) -> bool {
    match t.kind {
        TokenKind::CloseBracket | TokenKind::Hyphenated | TokenKind::Terminator => true,
        TokenKind::Punct => matches!(t.text.as_str(), "," | "." | "?" | ")"),
        _ => false,
    }
}

fn glues_right(t: &Token) -> bool {
    matches!(t.kind, TokenKind::OpenBracket | TokenKind::Elided)
}

/// Rewrites, capitalizes, punctuates and joins a token sequence.
///
/// A capital is applied after a `SentenceStart` marker and the text of a
/// `Terminator` marker is appended unless the sentence already ends with it.
pub fn post_process(tokens: &[Token], _language: Language) -> String {
    let mut tokens: Vec<Token> = tokens
        .iter()
        .filter(|t| t.is_marker() || !t.text.is_empty())
        .cloned()
        .collect();
    rewrite(&mut tokens);

    let mut capitalize_next = false;
    for t in tokens.iter_mut() {
        match t.kind {
            TokenKind::SentenceStart => capitalize_next = true,
            _ if capitalize_next && t.is_lexical() => {
                t.text = capitalize(&t.text);
                capitalize_next = false;
            }
            _ => {}
        }
    }

    let mut out = String::new();
    let mut glue_next = true;
    for t in &tokens {
        if t.kind == TokenKind::SentenceStart {
            continue;
        }
        if t.kind == TokenKind::Terminator {
            let trimmed = out.trim_end();
            if trimmed.ends_with(&t.text) || trimmed.ends_with('?') || trimmed.is_empty() {
                continue;
            }
        }
        if !glue_next && !glues_left(t) && !out.is_empty() {
            out.push(' ');
        }
        out.push_str(&t.text);
        glue_next = glues_right(t);
    }
    out.trim().to_string()
}

/// Whitespace tokens of an already realized string, for re-processing.
pub fn tokens_from_text(text: &str, language: Language) -> Vec<Token> {
    text.split_whitespace()
        .map(|w| Token::word(w, language))
        .collect()
}
