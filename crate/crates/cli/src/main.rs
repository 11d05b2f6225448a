use std::io::Write;

fn main() {
    let result = positivity_cli::run(std::env::args_os());
    let out = result.stdout();
    if result.exit_code == positivity_cli::EXIT_USAGE && !result.json {
        eprint!("{out}");
    } else {
        let mut stdout = std::io::stdout().lock();
        let _ = write!(stdout, "{out}");
        if !out.ends_with('\n') {
            let _ = writeln!(stdout);
        }
    }
    std::process::exit(result.exit_code);
}
