use super::MachineDesc;

pub const CORPUS_NAMES: [&str; 5] = ["ALWAYS_YES", "ALWAYS_NO", "LOOP", "EVEN", "BUSY3"];

fn source(name: &str) -> Option<&'static str> {
    Some(match name {
        "ALWAYS_YES" => include_str!("../../corpus/always_yes.tm"),
        "ALWAYS_NO" => include_str!("../../corpus/always_no.tm"),
        "LOOP" => include_str!("../../corpus/loop.tm"),
        "EVEN" => include_str!("../../corpus/even.tm"),
        "BUSY3" => include_str!("../../corpus/busy3.tm"),
        _ => return None,
    })
}

/// The corpus file for `name`, as shipped.
pub fn corpus_source(name: &str) -> Option<&'static str> {
    source(name)
}

pub fn corpus_machine(name: &str) -> Option<MachineDesc> {
    source(name).map(|text| MachineDesc::parse(text).expect("corpus machines parse"))
}

pub fn corpus() -> Vec<(&'static str, MachineDesc)> {
    CORPUS_NAMES
        .iter()
        .map(|&n| (n, corpus_machine(n).expect("corpus name")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::machines::{run, RunOutcome};

    #[test]
    fn files_are_in_canonical_form() {
        for name in CORPUS_NAMES {
            let text = source(name).unwrap();
            let body: String = text
                .lines()
                .filter(|l| !l.starts_with('#'))
                .map(|l| format!("{l}\n"))
                .collect();
            let m = corpus_machine(name).unwrap();
            assert_eq!(m.to_text(), body, "{name}");
            assert_eq!(MachineDesc::parse(&m.to_text()).unwrap(), m);
        }
    }

    #[test]
    fn busy_beaver_runs_fourteen_transitions() {
        let m = corpus_machine("BUSY3").unwrap();
        // 14 transitions, then the step that observes the halt state
        assert_eq!(run(&m, 0, 1000), RunOutcome::Yes(15));
    }
}
