use std::process::ExitCode;

fn main() -> ExitCode {
    chiplet_cost::cli::main_entry()
}
