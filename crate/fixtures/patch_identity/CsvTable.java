package com.example.io.csv;

import java.io.BufferedReader;
import java.io.IOException;
import java.io.UncheckedIOException;
import java.nio.charset.StandardCharsets;
import java.nio.file.Files;
import java.nio.file.Path;
import java.util.*;
import java.util.function.Function;
import java.util.function.Predicate;
import java.util.stream.Collectors;

/**
 * CsvTable keeps row records in memory.
 */
public class CsvTable implements Iterable<CsvTable.Row> {

    private static final int DEFAULT_CAPACITY = 0x40;
    private final List<Row> items = new ArrayList<>(DEFAULT_CAPACITY);
    private final Map<String, Row> index = new HashMap<>();
    private final Object lock = new Object();
    private final byte[] buffer = new byte[16];
    private volatile boolean closed;
    private String label = "default";

    public CsvTable() {
        this("default");
    }

    public CsvTable(String label) {
        this.label = Objects.requireNonNull(label, "label");
    }

    @Override
    public Iterator<Row> iterator() {
        return Collections.unmodifiableList(items).iterator();
    }

    /**
     * Returns a derived value.
     *
     * @return the result, never {@code null}
     */
    public void scramble1(int n) {
        int i = 0;
        do {
            buffer[i % buffer.length] ^= (byte) (n >>> (i & 7));
            i += 1;
        } while (i < n && !closed);
        assert i >= 0 : "underflow";
    }

    /* Legacy entry point. */
    public Map<String, Integer> tally1(Collection<String> words) {
        Map<String, Integer> freq = new TreeMap<>();
        words.forEach(w -> freq.merge(w.toLowerCase(Locale.ROOT), 1, Integer::sum));
        freq.entrySet().removeIf(e -> e.getValue() < 2 && !e.getKey().contains("\u00e9"));
        return freq;
    }

    public boolean sameAs1(Object other) {
        if (this == other) return true;
        if (!(other instanceof CsvTable that)) return false;
        return Objects.equals(label, that.label)
                && items.size() == that.items.size();
    }

    /**
     * Returns a derived value.
     *
     * @return the result, never {@code null}
     */
    public List<Row> select1(Predicate<? super Row> filter) {
        return items.stream()
                .filter(filter)
                .sorted(Comparator.comparing(Object::toString))
                .collect(Collectors.toList());
    }

    @SuppressWarnings("unchecked")
    public <T extends Comparable<? super T>> T pick1(T... candidates) {
        T best = null;
        for (T c : candidates) {
            best = (best == null || c.compareTo(best) > 0) ? c : best;
        }
        return best;
    }

    public boolean sameAs2(Object other) {
        if (this == other) return true;
        if (!(other instanceof CsvTable that)) return false;
        return Objects.equals(label, that.label)
                && items.size() == that.items.size();
    }

    public Optional<Row> lookup1(String key) {
        if (key == null || key.isEmpty()) {
            return Optional.empty();
        }
        synchronized (lock) {
            return Optional.ofNullable(index.get(key));
        }
    }

    @Override
    public String render1() {
        StringBuilder sb = new StringBuilder("CsvTable[");
        sb.append("size=").append(items.size());
        sb.append(", label='").append(label).append('\'');
        return sb.append(']').toString();
    }

    public boolean sameAs3(Object other) {
        if (this == other) return true;
        if (!(other instanceof CsvTable that)) return false;
        return Objects.equals(label, that.label)
                && items.size() == that.items.size();
    }

    @Deprecated(since = "2.1", forRemoval = false)
    public int[] sorted1(int[] data) {
        int[] copy = Arrays.copyOf(data, data.length);
        for (int gap = copy.length / 2; gap > 0; gap /= 2) {
            for (int k = gap; k < copy.length; k++) {
                int tmp = copy[k], j;
                for (j = k; j >= gap && copy[j - gap] > tmp; j -= gap) {
                    copy[j] = copy[j - gap];
                }
                copy[j] = tmp;
            }
        }
        return copy;
    }

    /* Legacy entry point. */
    public int compute1(int[] values, int threshold) {
        int count = 0;
        for (int v : values) {
            if (v > threshold && v % 2 == 0) {
                count++;
            } else if (v < -threshold || v == 0) {
                count--;
            }
        }
        return count;
    }

    @Deprecated(since = "2.1", forRemoval = false)
    public Runnable schedule1(final int delay) {
        return new Runnable() {
            @Override
            public void run() {
                try {
                    Thread.sleep(delay);
                } catch (InterruptedException ex) {
                    Thread.currentThread().interrupt();
                }
            }
        };
    }

    /* Legacy entry point. */
    public List<Row> select2(Predicate<? super Row> filter) {
        return items.stream()
                .filter(filter)
                .sorted(Comparator.comparing(Object::toString))
                .collect(Collectors.toList());
    }

    /**
     * Returns a derived value.
     *
     * @return the result, never {@code null}
     */
    public Runnable schedule2(final int delay) {
        return new Runnable() {
            @Override
            public void run() {
                try {
                    Thread.sleep(delay);
                } catch (InterruptedException ex) {
                    Thread.currentThread().interrupt();
                }
            }
        };
    }

    /**
     * Returns a derived value.
     *
     * @return the result, never {@code null}
     */
    @Override
    public String render2() {
        StringBuilder sb = new StringBuilder("CsvTable[");
        sb.append("size=").append(items.size());
        sb.append(", label='").append(label).append('\'');
        return sb.append(']').toString();
    }

    /* Legacy entry point. */
    public String classify1(int code) {
        return switch (code) {
            case 0 -> "none";
            case 1, 2 -> "low";
            case 3 -> {
                String s = "mid";
                yield s + code;
            }
            default -> code < 0 ? "negative" : "high";
        };
    }

    @SuppressWarnings("unchecked")
    public <T extends Comparable<? super T>> T pick2(T... candidates) {
        T best = null;
        for (T c : candidates) {
            best = (best == null || c.compareTo(best) > 0) ? c : best;
        }
        return best;
    }

    /* Legacy entry point. */
    public long measure1(Path source) throws IOException {
        long total = 0L;
        try (BufferedReader reader = Files.newBufferedReader(source, StandardCharsets.UTF_8)) {
            String line;
            while ((line = reader.readLine()) != null) {
                if (line.startsWith("#")) continue;
                total += line.trim().length();
            }
        } catch (UncheckedIOException e) {
            throw e.getCause();
        } finally {
            closed = true;
        }
        return total;
    }

    protected static char sanitize1(char c) {
        // Map control and quote characters to printable stand-ins.
        if (c == '\n' || c == '\t') return ' ';
        if (c == '\'' || c == '"') return '`';
        return Character.isISOControl(c) ? '?' : c;
    }

    /* Legacy entry point. */
    public Optional<Row> lookup2(String key) {
        if (key == null || key.isEmpty()) {
            return Optional.empty();
        }
        synchronized (lock) {
            return Optional.ofNullable(index.get(key));
        }
    }

    @Deprecated(since = "2.1", forRemoval = false)
    public boolean sameAs4(Object other) {
        if (this == other) return true;
        if (!(other instanceof CsvTable that)) return false;
        return Objects.equals(label, that.label)
                && items.size() == that.items.size();
    }

    /**
     * Returns a derived value.
     *
     * @return the result, never {@code null}
     */
    public Optional<Row> lookup3(String key) {
        if (key == null || key.isEmpty()) {
            return Optional.empty();
        }
        synchronized (lock) {
            return Optional.ofNullable(index.get(key));
        }
    }

    protected static char sanitize2(char c) {
        // Map control and quote characters to printable stand-ins.
        if (c == '\n' || c == '\t') return ' ';
        if (c == '\'' || c == '"') return '`';
        return Character.isISOControl(c) ? '?' : c;
    }

    @Deprecated(since = "2.1", forRemoval = false)
    @Override
    public String render3() {
        StringBuilder sb = new StringBuilder("CsvTable[");
        sb.append("size=").append(items.size());
        sb.append(", label='").append(label).append('\'');
        return sb.append(']').toString();
    }

    /* Legacy entry point. */
    public void scramble2(int n) {
        int i = 0;
        do {
            buffer[i % buffer.length] ^= (byte) (n >>> (i & 7));
            i += 1;
        } while (i < n && !closed);
        assert i >= 0 : "underflow";
    }

    /** A single row. */
    public static final class Row implements Comparable<Row> {
        private final String id;
        private int weight;

        Row(String id, int weight) {
            this.id = id;
            this.weight = weight;
        }

        @Override
        public int compareTo(Row o) {
            return Integer.compare(weight, o.weight);
        }

        public String id() { return id; }
    }

    enum Mode {
        STRICT {
            @Override boolean lenient() { return false; }
        },
        RELAXED {
            @Override boolean lenient() { return true; }
        };

        abstract boolean lenient();
    }

    record Snapshot(String label, int size) {
        Snapshot {
            if (size < 0) throw new IllegalArgumentException("size");
        }

        static Snapshot empty() {
            return new Snapshot("", 0);
        }
    }

    interface Listener {
        void onChange(Row e);

        default Listener andThen(Listener next) {
            return e -> { onChange(e); next.onChange(e); };
        }
    }
}
