fn main() {
    std::process::exit(transit::cli::main_entry(std::env::args_os()));
}
