fn main() {
    std::process::exit(lieklein_cli::main_with(std::env::args_os()));
}
