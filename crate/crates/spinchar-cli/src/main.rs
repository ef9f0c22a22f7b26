fn main() {
    eprintln!("spinchar: not wired up yet");
    std::process::exit(2);
}
