use chrono::{Datelike, NaiveDateTime, Timelike};
use serde::{Deserialize, Serialize};

use crate::features::Language;

pub const WEEKDAYS_EN: [&str; 7] = [
    "Monday",
    "Tuesday",
    "Wednesday",
    "Thursday",
    "Friday",
    "Saturday",
    "Sunday",
];
pub const WEEKDAYS_FR: [&str; 7] = [
    "lundi", "mardi", "mercredi", "jeudi", "vendredi", "samedi", "dimanche",
];
pub const MONTHS_EN: [&str; 12] = [
    "January",
    "February",
    "March",
    "April",
    "May",
    "June",
    "July",
    "August",
    "September",
    "October",
    "November",
    "December",
];
pub const MONTHS_FR: [&str; 12] = [
    "janvier",
    "février",
    "mars",
    "avril",
    "mai",
    "juin",
    "juillet",
    "août",
    "septembre",
    "octobre",
    "novembre",
    "décembre",
];

/// Which segments of a date are worded. At least one must stay enabled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DateOptions {
    pub year: bool,
    pub month: bool,
    pub date: bool,
    pub day: bool,
    pub hour: bool,
    pub minute: bool,
    pub second: bool,
}

impl Default for DateOptions {
    fn default() -> Self {
        DateOptions {
            year: true,
            month: true,
            date: true,
            day: true,
            hour: true,
            minute: true,
            second: true,
        }
    }
}

impl DateOptions {
    pub const KEYS: [&'static str; 7] = ["year", "month", "date", "day", "hour", "minute", "second"];

    pub fn date_only() -> Self {
        DateOptions {
            hour: false,
            minute: false,
            second: false,
            ..Default::default()
        }
    }

    pub fn get(&self, key: &str) -> Option<bool> {
        Some(match key {
            "year" => self.year,
            "month" => self.month,
            "date" => self.date,
            "day" => self.day,
            "hour" => self.hour,
            "minute" => self.minute,
            "second" => self.second,
            _ => return None,
        })
    }

    /// Returns false for unknown keys.
    pub fn set(&mut self, key: &str, on: bool) -> bool {
        let slot = match key {
            "year" => &mut self.year,
            "month" => &mut self.month,
            "date" => &mut self.date,
            "day" => &mut self.day,
            "hour" => &mut self.hour,
            "minute" => &mut self.minute,
            "second" => &mut self.second,
            _ => return false,
        };
        *slot = on;
        true
    }

    pub fn any(&self) -> bool {
        Self::KEYS.iter().any(|k| self.get(k) == Some(true))
    }

    fn any_date_part(&self) -> bool {
        self.year || self.month || self.date || self.day
    }
}

/// Words a date-time. English: `on Tuesday, May 30, 2023 at 5 p.m.`;
/// French: `le mardi 30 mai 2023 à 17 h`.
pub fn format_date(ts: &NaiveDateTime, opts: &DateOptions, language: Language) -> Vec<String> {
    match language {
        Language::En => english(ts, opts),
        Language::Fr => french(ts, opts),
    }
}

fn english(ts: &NaiveDateTime, o: &DateOptions) -> Vec<String> {
    let mut groups: Vec<Vec<String>> = Vec::new();
    if o.day {
        groups.push(vec![
            WEEKDAYS_EN[ts.weekday().num_days_from_monday() as usize].into()
        ]);
    }
    let mut month_date = Vec::new();
    if o.month {
        month_date.push(MONTHS_EN[ts.month0() as usize].to_string());
    }
    if o.date {
        month_date.push(ts.day().to_string());
    }
    if !month_date.is_empty() {
        groups.push(month_date);
    }
    let mut out = Vec::new();
    if o.any_date_part() {
        out.push("on".to_string());
    }
    let n_groups = groups.len();
    for (i, group) in groups.into_iter().enumerate() {
        out.extend(group);
        let comma_before_year = o.year && o.date;
        if i + 1 < n_groups || (i + 1 == n_groups && comma_before_year) {
            out.push(",".into());
        }
    }
    if o.year {
        out.push(ts.year().to_string());
    }
    if out.last().map(String::as_str) == Some(",") {
        out.pop();
    }
    if o.hour {
        let h12 = match ts.hour() % 12 {
            0 => 12,
            h => h,
        };
        let mut clock = h12.to_string();
        if o.minute {
            clock.push_str(&format!(":{:02}", ts.minute()));
            if o.second {
                clock.push_str(&format!(":{:02}", ts.second()));
            }
        }
        out.push("at".into());
        out.push(clock);
        out.push(if ts.hour() < 12 { "a.m." } else { "p.m." }.into());
    }
    out
}

fn french(ts: &NaiveDateTime, o: &DateOptions) -> Vec<String> {
    let mut out = Vec::new();
    if o.any_date_part() {
        out.push("le".to_string());
    }
    if o.day {
        out.push(WEEKDAYS_FR[ts.weekday().num_days_from_monday() as usize].into());
    }
    if o.date {
        out.push(match ts.day() {
            1 => "1er".to_string(),
            d => d.to_string(),
        });
    }
    if o.month {
        out.push(MONTHS_FR[ts.month0() as usize].into());
    }
    if o.year {
        out.push(ts.year().to_string());
    }
    if o.hour {
        out.push("à".into());
        out.push(ts.hour().to_string());
        out.push("h".into());
        if o.minute {
            out.push(ts.minute().to_string());
            if o.second {
                out.push("min".into());
                out.push(ts.second().to_string());
                out.push("s".into());
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use chrono::NaiveDate;

    fn at(y: i32, m: u32, d: u32, h: u32, min: u32) -> NaiveDateTime {
        NaiveDate::from_ymd_opt(y, m, d)
            .unwrap()
            .and_hms_opt(h, min, 0)
            .unwrap()
    }

    fn no_min_sec() -> DateOptions {
        DateOptions {
            minute: false,
            second: false,
            ..Default::default()
        }
    }

    fn joined(tokens: Vec<String>) -> String {
        tokens.join(" ").replace(" ,", ",")
    }

    #[test]
    fn english_without_time() {
        let s = joined(format_date(
            &at(2023, 5, 30, 0, 0),
            &DateOptions::date_only(),
            Language::En,
        ));
        assert_eq!(s, "on Tuesday, May 30, 2023");
    }

    #[test]
    fn english_with_hour() {
        let s = joined(format_date(&at(2023, 9, 25, 17, 0), &no_min_sec(), Language::En));
        assert_eq!(s, "on Monday, September 25, 2023 at 5 p.m.");
    }

    #[test]
    fn french_with_hour() {
        let s = joined(format_date(&at(2023, 9, 26, 17, 0), &no_min_sec(), Language::Fr));
        assert_eq!(s, "le mardi 26 septembre 2023 à 17 h");
    }

    #[test]
    fn twelve_hour_clock_edges() {
        let o = no_min_sec();
        assert!(joined(format_date(&at(2023, 1, 1, 0, 0), &o, Language::En)).ends_with("at 12 a.m."));
        assert!(joined(format_date(&at(2023, 1, 1, 12, 0), &o, Language::En)).ends_with("at 12 p.m."));
    }

    #[test]
    fn minutes_and_seconds() {
        let ts = NaiveDate::from_ymd_opt(2018, 7, 18)
            .unwrap()
            .and_hms_opt(16, 5, 9)
            .unwrap();
        let all = DateOptions::default();
        assert!(joined(format_date(&ts, &all, Language::En)).ends_with("at 4:05:09 p.m."));
        assert!(joined(format_date(&ts, &all, Language::Fr)).ends_with("à 16 h 5 min 9 s"));
        let no_sec = DateOptions {
            second: false,
            ..Default::default()
        };
        assert!(joined(format_date(&ts, &no_sec, Language::Fr)).ends_with("à 16 h 5"));
    }

    #[test]
    fn disabled_segments_drop_out() {
        let ts = at(2023, 10, 1, 9, 0);
        let only_time = DateOptions {
            year: false,
            month: false,
            date: false,
            day: false,
            minute: false,
            second: false,
            hour: true,
        };
        assert_eq!(joined(format_date(&ts, &only_time, Language::Fr)), "à 9 h");
        assert_eq!(joined(format_date(&ts, &only_time, Language::En)), "at 9 a.m.");
        let no_weekday = DateOptions {
            day: false,
            ..DateOptions::date_only()
        };
        assert_eq!(
            joined(format_date(&ts, &no_weekday, Language::En)),
            "on October 1, 2023"
        );
        assert_eq!(
            joined(format_date(&ts, &no_weekday, Language::Fr)),
            "le 1er octobre 2023"
        );
    }

    #[test]
    fn options_keys() {
        let mut o = DateOptions::default();
        assert!(o.set("hour", false));
        assert!(!o.set("week", false));
        assert_eq!(o.get("hour"), Some(false));
        for k in DateOptions::KEYS {
            o.set(k, false);
        }
        assert!(!o.any());
    }
}
