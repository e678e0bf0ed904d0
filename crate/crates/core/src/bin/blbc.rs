use clap::Parser;

fn main() {
    let cli = blbc::cli::Cli::parse();
    let code = blbc::cli::run(cli, &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    std::process::exit(code);
}
