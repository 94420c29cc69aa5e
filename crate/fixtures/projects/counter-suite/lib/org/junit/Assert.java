package org.junit;

/** Minimal stand-in for the JUnit 4 assertion class. */
public final class Assert {
    private Assert() {
    }

    public static void assertTrue(String message, boolean condition) {
        if (!condition) {
            throw new AssertionError(message);
        }
    }

    public static void assertNotNull(String message, Object value) {
        assertTrue(message, value != null);
    }

    public static void assertEquals(String message, long expected, long actual) {
        assertTrue(message + ": expected " + expected + " but was " + actual, expected == actual);
    }
}
