//! Table export formats, selectable by name.

use std::collections::BTreeMap;

use htype_core::golden::table_to_json;
use htype_core::lie_algebra::StructureTable;

/// One way of rendering a structure table.
pub trait TableFormat: Send + Sync {
    fn name(&self) -> &'static str;
    fn render(&self, table: &StructureTable, number: Option<u32>) -> String;
}

/// The reference-table document format, with checksum and basis words.
pub struct JsonFormat;

impl TableFormat for JsonFormat {
    fn name(&self) -> &'static str {
        "json"
    }

    fn render(&self, table: &StructureTable, number: Option<u32>) -> String {
        table_to_json(table, number)
    }
}

/// One `a,b,k,sign` row per nonzero coefficient, row-major.
pub struct CsvFormat;

impl TableFormat for CsvFormat {
    fn name(&self) -> &'static str {
        "csv"
    }

    fn render(&self, table: &StructureTable, _number: Option<u32>) -> String {
        table
            .nonzero_entries()
            .into_iter()
            .map(|(a, b, k, c)| format!("{a},{b},{k},{c}\n"))
            .collect()
    }
}

/// A `tabular` whose first row and column hold the basis labels and whose
/// corner reads `[r, c]`.
pub struct LatexFormat;

fn latex_label(label: &str) -> String {
    let split = label
        .find(|c: char| c.is_ascii_digit())
        .unwrap_or(label.len());
    let (head, digits) = label.split_at(split);
    if digits.is_empty() {
        format!("${head}$")
    } else {
        format!("${head}_{{{digits}}}$")
    }
}

fn latex_cell(table: &StructureTable, a: usize, b: usize) -> String {
    let cell = table.cell(a, b);
    if cell.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, &(k, c)) in cell.0.iter().enumerate() {
        match (i, c) {
            (0, 1) => {}
            (0, _) => out.push('-'),
            (_, 1) => out.push('+'),
            _ => out.push('-'),
        }
        out.push_str(&format!("z_{{{k}}}"));
    }
    format!("${out}$")
}

impl TableFormat for LatexFormat {
    fn name(&self) -> &'static str {
        "latex"
    }

    fn render(&self, table: &StructureTable, number: Option<u32>) -> String {
        let n = table.dim_v;
        let mut out = String::new();
        let sig = table.realizes.unwrap_or(table.sig);
        match number {
            Some(t) => out.push_str(&format!("% Table {t}: n_{{{},{}}}\n", sig.r(), sig.s())),
            None => out.push_str(&format!("% n_{{{},{}}}\n", sig.r(), sig.s())),
        }
        out.push_str(&format!("\\begin{{tabular}}{{c|{}}}\n", "c".repeat(n)));
        let header: Vec<String> = table.labels.iter().map(|l| latex_label(l)).collect();
        out.push_str(&format!(
            "$[r, c]$ & {} \\\\\n\\hline\n",
            header.join(" & ")
        ));
        for a in 1..=n {
            let row: Vec<String> = (1..=n).map(|b| latex_cell(table, a, b)).collect();
            out.push_str(&format!("{} & {} \\\\\n", header[a - 1], row.join(" & ")));
        }
        out.push_str("\\end{tabular}\n");
        out
    }
}

/// Export formats by name.
pub struct FormatRegistry {
    formats: BTreeMap<&'static str, Box<dyn TableFormat>>,
}

impl Default for FormatRegistry {
    fn default() -> Self {
        let mut registry = FormatRegistry {
            formats: BTreeMap::new(),
        };
        registry.register(Box::new(JsonFormat));
        registry.register(Box::new(CsvFormat));
        registry.register(Box::new(LatexFormat));
        registry
    }
}

impl FormatRegistry {
    pub fn register(&mut self, format: Box<dyn TableFormat>) {
        self.formats.insert(format.name(), format);
    }

    pub fn get(&self, name: &str) -> Option<&dyn TableFormat> {
        self.formats.get(name).map(Box::as_ref)
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.formats.keys().copied().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use htype_core::golden::{golden_table, parse_table_json};
    use htype_core::words::Signature;

    fn table_1() -> StructureTable {
        golden_table(Signature::new(1, 0).unwrap()).unwrap().table
    }

    #[test]
    fn registry_lists_builtin_formats() {
        assert_eq!(FormatRegistry::default().names(), ["csv", "json", "latex"]);
        assert!(FormatRegistry::default().get("xml").is_none());
    }

    #[test]
    fn csv_rows() {
        assert_eq!(CsvFormat.render(&table_1(), Some(1)), "1,2,1,1\n2,1,1,-1\n");
    }

    #[test]
    fn latex_layout() {
        let text = LatexFormat.render(&table_1(), Some(1));
        assert!(text.contains("$[r, c]$ & $v_{1}$ & $v_{2}$ \\\\"));
        assert!(text.contains("$v_{1}$ & 0 & $z_{1}$ \\\\"));
        assert!(text.contains("$v_{2}$ & $-z_{1}$ & 0 \\\\"));
    }

    #[test]
    fn json_parses_back() {
        let t = table_1();
        assert_eq!(
            parse_table_json(&JsonFormat.render(&t, Some(1)))
                .unwrap()
                .table,
            t
        );
    }
}
