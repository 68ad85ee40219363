//! Machine-readable check reports shared by the verification suites.

use serde::Serialize;

/// One checked identity: the input, the expected and computed sides
/// rendered canonically, and whether they agree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckItem {
    pub input: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

impl CheckItem {
    pub fn new(input: impl Into<String>, expected: String, got: String) -> Self {
        let pass = expected == got;
        CheckItem {
            input: input.into(),
            expected,
            got,
            pass,
        }
    }

    pub fn with_pass(input: impl Into<String>, expected: String, got: String, pass: bool) -> Self {
        CheckItem {
            input: input.into(),
            expected,
            got,
            pass,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub check: String,
    pub pass: bool,
    pub items: Vec<CheckItem>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(check: impl Into<String>, items: Vec<CheckItem>) -> Self {
        let pass = items.iter().all(|i| i.pass);
        Report {
            check: check.into(),
            pass,
            items,
            notes: Vec::new(),
        }
    }

    pub fn note(mut self, text: impl Into<String>) -> Self {
        self.notes.push(text.into());
        self
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> {
        self.items.iter().filter(|i| !i.pass)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{}: {} ({} items, {} failed)\n",
            self.check,
            if self.pass { "pass" } else { "FAIL" },
            self.items.len(),
            self.failures().count()
        );
        for i in &self.items {
            out.push_str(&format!(
                "  [{}] {}\n      expected: {}\n      got:      {}\n",
                if i.pass { "ok" } else { "FAIL" },
                i.input,
                i.expected,
                i.got
            ));
        }
        for n in &self.notes {
            out.push_str(&format!("  note: {n}\n"));
        }
        out
    }
}
