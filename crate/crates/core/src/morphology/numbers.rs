use crate::features::{Gender, Language};

use super::MorphError;

pub const MAX_SPELLED: i64 = 999_999;

const EN_UNITS: [&str; 20] = [
    "zero",
    "one",
    "two",
    "three",
    "four",
    "five",
    "six",
    "seven",
    "eight",
    "nine",
    "ten",
    "eleven",
    "twelve",
    "thirteen",
    "fourteen",
    "fifteen",
    "sixteen",
    "seventeen",
    "eighteen",
    "nineteen",
];
const EN_TENS: [&str; 10] = [
    "", "", "twenty", "thirty", "forty", "fifty", "sixty", "seventy", "eighty", "ninety",
];

const FR_UNITS: [&str; 20] = [
    "zéro", "un", "deux", "trois", "quatre", "cinq", "six", "sept", "huit", "neuf", "dix", "onze", "douze",
    "treize", "quatorze", "quinze", "seize", "dix-sept", "dix-huit", "dix-neuf",
];
const FR_TENS: [&str; 7] = ["", "", "vingt", "trente", "quarante", "cinquante", "soixante"];

/// Spelled-out cardinal for `0..=999_999`. French feminine applies to a final
/// "un" only (une, vingt et une, mille une).
pub fn number_to_words(value: i64, gender: Gender, language: Language) -> Result<Vec<String>, MorphError> {
    if !(0..=MAX_SPELLED).contains(&value) {
        return Err(MorphError::OutOfRange(value));
    }
    let n = value as u32;
    let text = match language {
        Language::En => english(n),
        Language::Fr => french(n, gender),
    };
    Ok(text.split(' ').map(str::to_string).collect())
}

fn english(n: u32) -> String {
    if n == 0 {
        return EN_UNITS[0].to_string();
    }
    let (thousands, rest) = (n / 1000, n % 1000);
    let mut parts = Vec::new();
    if thousands > 0 {
        parts.push(format!("{} thousand", english_below_1000(thousands)));
    }
    if rest > 0 {
        parts.push(english_below_1000(rest));
    }
    parts.join(" ")
}

fn english_below_1000(n: u32) -> String {
    let (hundreds, rest) = (n / 100, n % 100);
    let mut parts = Vec::new();
    if hundreds > 0 {
        parts.push(format!("{} hundred", EN_UNITS[hundreds as usize]));
    }
    if rest > 0 {
        parts.push(english_below_100(rest));
    }
    parts.join(" ")
}

fn english_below_100(n: u32) -> String {
    if n < 20 {
        return EN_UNITS[n as usize].to_string();
    }
    let (tens, unit) = (n / 10, n % 10);
    if unit == 0 {
        EN_TENS[tens as usize].to_string()
    } else {
        format!("{}-{}", EN_TENS[tens as usize], EN_UNITS[unit as usize])
    }
}

fn french(n: u32, gender: Gender) -> String {
    if n == 0 {
        return FR_UNITS[0].to_string();
    }
    let (thousands, rest) = (n / 1000, n % 1000);
    let mut parts = Vec::new();
    match thousands {
        0 => {}
        1 => parts.push("mille".to_string()),
        k => parts.push(format!(
            "{} mille",
            french_below_1000(k, false, Gender::Masculine)
        )),
    }
    if rest > 0 {
        parts.push(french_below_1000(rest, true, gender));
    }
    parts.join(" ")
}

/// `terminal` is false when a multiplier follows (mille), which drops the
/// plural -s of "cents" and "quatre-vingts".
fn french_below_1000(n: u32, terminal: bool, gender: Gender) -> String {
    let (hundreds, rest) = (n / 100, n % 100);
    let mut parts = Vec::new();
    match hundreds {
        0 => {}
        1 => parts.push("cent".to_string()),
        h => {
            let s = if rest == 0 && terminal { "s" } else { "" };
            parts.push(format!("{} cent{s}", FR_UNITS[h as usize]));
        }
    }
    if rest > 0 {
        parts.push(french_below_100(rest, terminal, gender));
    }
    parts.join(" ")
}

fn french_below_100(n: u32, terminal: bool, gender: Gender) -> String {
    let unit_word = |u: u32| -> &'static str {
        if u == 1 && gender == Gender::Feminine {
            "une"
        } else {
            FR_UNITS[u as usize]
        }
    };
    if n < 20 {
        return unit_word(n).to_string();
    }
    let (tens, unit) = (n / 10, n % 10);
    match tens {
        2..=6 => match unit {
            0 => FR_TENS[tens as usize].to_string(),
            1 => format!("{} et {}", FR_TENS[tens as usize], unit_word(1)),
            u => format!("{}-{}", FR_TENS[tens as usize], FR_UNITS[u as usize]),
        },
        7 => match unit {
            1 => "soixante et onze".to_string(),
            u => format!("soixante-{}", FR_UNITS[10 + u as usize]),
        },
        8 => match unit {
            0 if terminal => "quatre-vingts".to_string(),
            0 => "quatre-vingt".to_string(),
            u => format!("quatre-vingt-{}", unit_word(u)),
        },
        _ => format!("quatre-vingt-{}", FR_UNITS[10 + unit as usize]),
    }
}
