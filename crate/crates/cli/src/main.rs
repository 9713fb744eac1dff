use strip_starlike_cli::{run_with, Environment};

fn main() {
    let code = run_with(
        std::env::args_os(),
        &Environment::from_process(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    );
    std::process::exit(code);
}
