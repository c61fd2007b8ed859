use clap::ValueEnum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// `key: value` lines.
    Text,
    /// `key=value` lines, one record per run.
    Kv,
}

/// Ordered key/value fields plus the process exit code.
#[derive(Debug)]
pub struct Report {
    pub code: u8,
    fields: Vec<(&'static str, String)>,
    plain: Option<String>,
}

impl Report {
    pub fn new(code: u8) -> Self {
        Report { code, fields: Vec::new(), plain: None }
    }

    pub fn field(mut self, key: &'static str, value: impl ToString) -> Self {
        self.fields.push((key, value.to_string()));
        self
    }

    /// Text to print as-is in text format instead of the fields.
    pub fn plain(mut self, text: String) -> Self {
        self.plain = Some(text);
        self
    }

    pub fn render(&self, format: Format) -> String {
        if let (Format::Text, Some(p)) = (format, &self.plain) {
            return format!("{p}\n");
        }
        let mut out = String::new();
        for (k, v) in &self.fields {
            match format {
                Format::Text => out.push_str(&format!("{k}: {v}\n")),
                Format::Kv => out.push_str(&format!("{k}={}\n", v.replace('\n', " "))),
            }
        }
        out
    }
}
