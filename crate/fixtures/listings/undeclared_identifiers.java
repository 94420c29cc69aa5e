public UUID execute() {
    long leastSigBits = toLong(data, offset);
    long mostSigBits  = toLong(data, offset + 4);
    return new UUID(mostSigBits, leastSigBits);
}
