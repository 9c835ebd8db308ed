fn main() {
    std::process::exit(twisted_chevalley::cli::main_with_args(std::env::args_os()));
}
