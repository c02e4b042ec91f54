//! A human adversary on the terminal.

use std::io::{BufRead, Write};

use perron_core::{Abort, Adversary, Position};

/// Shows the position on `out` and reads `j` (1-based) from `input`.
pub struct Prompt<R, W> {
    input: R,
    out: W,
}

impl<R: BufRead, W: Write> Prompt<R, W> {
    pub fn new(input: R, out: W) -> Self {
        Prompt { input, out }
    }

    pub fn into_parts(self) -> (R, W) {
        (self.input, self.out)
    }

    fn show(&mut self, position: &Position<'_>, set: &str) -> std::io::Result<()> {
        writeln!(self.out, "round {}", position.round + 1)?;
        for (i, v) in position.vectors.iter().enumerate() {
            let mark = if position.champion == Some(i) { "  (champion)" } else { "" };
            writeln!(self.out, "  [{i}] {v}{mark}")?;
        }
        writeln!(self.out, "J = {set}")
    }
}

fn format_set(set: &[usize]) -> String {
    let items: Vec<String> = set.iter().map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", items.join(","))
}

impl<R: BufRead, W: Write> Adversary for Prompt<R, W> {
    fn choose(&mut self, position: &Position<'_>) -> Result<usize, Abort> {
        let set = format_set(position.set);
        self.show(position, &set).map_err(|_| Abort)?;
        loop {
            write!(self.out, "choose j ∈ J: ").map_err(|_| Abort)?;
            self.out.flush().map_err(|_| Abort)?;
            let mut line = String::new();
            match self.input.read_line(&mut line) {
                Ok(0) | Err(_) => {
                    let _ = writeln!(self.out);
                    return Err(Abort);
                }
                Ok(_) => {}
            }
            let picked = line
                .trim()
                .parse::<usize>()
                .ok()
                .and_then(|j| j.checked_sub(1))
                .filter(|j| position.set.contains(j));
            match picked {
                Some(j) => return Ok(j),
                None => writeln!(self.out, "j must be one of {set}").map_err(|_| Abort)?,
            }
        }
    }
}
