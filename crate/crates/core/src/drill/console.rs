use std::io::{self, BufRead, Write};

use crate::engine::Engine;

use super::{check_answer, Direction, PatternSet};

/// Interactive loop: shows a source sentence and the shuffled tokens, reads
/// an answer and prints `expected:OK` or `expected:KO`. Stops on `end` or
/// end of input; returns the number of answers checked.
pub fn run_console<R: BufRead, W: Write>(
    engine: &Engine,
    patterns: &PatternSet,
    direction: Direction,
    level: u8,
    seed: u64,
    mut input: R,
    out: &mut W,
) -> io::Result<usize> {
    writeln!(
        out,
        "Translate in {} the sentences in {} using some of the suggested words.",
        direction.target().name(),
        direction.source().name()
    )?;
    writeln!(out, "Type \"end\" to exit.")?;
    let mut checked = 0;
    for exercise in patterns.sequence(engine, direction, level, seed) {
        let e = exercise.map_err(io::Error::other)?;
        writeln!(out, "{}", e.source_text)?;
        writeln!(out, "{}", e.tokens.join(", "))?;
        write!(out, "> ")?;
        out.flush()?;
        let mut line = String::new();
        if input.read_line(&mut line)? == 0 || line.trim() == "end" {
            break;
        }
        let v = check_answer(&e, &line);
        writeln!(out, "    {}:{}", v.expected, if v.correct { "OK" } else { "KO" })?;
        checked += 1;
    }
    Ok(checked)
}
