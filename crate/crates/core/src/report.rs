//! Line-oriented check reports: `PASS|FAIL <check-id> <fixture> <level> [witness]`.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckLine {
    pub id: String,
    pub fixture: String,
    pub level: u32,
    pub passed: bool,
    pub witness: Option<String>,
}

impl CheckLine {
    pub fn new(id: &str, fixture: &str, level: u32, outcome: Result<(), String>) -> Self {
        let (passed, witness) = match outcome {
            Ok(()) => (true, None),
            Err(w) => (false, Some(w)),
        };
        CheckLine { id: id.to_string(), fixture: fixture.to_string(), level, passed, witness }
    }

    pub fn with_note(mut self, note: String) -> Self {
        self.witness = Some(note);
        self
    }
}

impl fmt::Display for CheckLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {} {} {}", self.id, self.fixture, self.level)?;
        if let Some(w) = &self.witness {
            write!(f, " [{w}]")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    lines: Vec<CheckLine>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, line: CheckLine) {
        self.lines.push(line);
    }

    pub fn check(&mut self, id: &str, fixture: &str, level: u32, outcome: Result<(), String>) {
        self.push(CheckLine::new(id, fixture, level, outcome));
    }

    pub fn extend(&mut self, other: Report) {
        self.lines.extend(other.lines);
    }

    pub fn lines(&self) -> &[CheckLine] {
        &self.lines
    }

    pub fn all_passed(&self) -> bool {
        self.lines.iter().all(|l| l.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckLine> {
        self.lines.iter().filter(|l| !l.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in &self.lines {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}
