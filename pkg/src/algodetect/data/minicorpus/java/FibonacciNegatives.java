public class FibonacciNegatives {

    public static long factorialIterative(int n) {
        long result = 1;
        for (int i = 1; i <= n; i = i + 1) {
            result = result * i;
        }
        return result;
    }

    public static int sumToN(int n) {
        int total = 0;
        for (int i = 1; i <= n; i++) {
            total = total + i;
        }
        return total;
    }

    public static long powersOfTwo(int limit) {
        long p = 1;
        for (int i = 0; i < limit; i++) {
            p = p * 2;
        }
        return p;
    }

    public static int triangularRecursive(int n) {
        if (n <= 0) {
            return 0;
        }
        return n + triangularRecursive(n - 1);
    }

    public static int collatzSteps(long value) {
        int steps = 0;
        while (value != 1) {
            if (value % 2 == 0) {
                value = value / 2;
            } else {
                value = 3 * value + 1;
            }
            steps++;
        }
        return steps;
    }

    public static int arithmeticSeries(int start, int step, int terms) {
        int total = 0;
        int current = start;
        for (int k = 0; k < terms; k++) {
            total = total + current;
            current = current + step;
        }
        return total;
    }

    public static String appendChars(char letter, int times) {
        StringBuilder sb = new StringBuilder();
        for (int i = 0; i < times; i++) {
            sb.append(letter);
        }
        return sb.toString();
    }

    public static int countVowels(String text) {
        int count = 0;
        for (int i = 0; i < text.length(); i++) {
            char c = text.charAt(i);
            if (c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u') {
                count++;
            }
        }
        return count;
    }

    public static int maxElement(int[] data) {
        int best = data[0];
        for (int i = 1; i < data.length; i++) {
            if (data[i] > best) {
                best = data[i];
            }
        }
        return best;
    }

    public static int bitCount(int value) {
        int bits = 0;
        while (value != 0) {
            bits += value & 1;
            value = value >>> 1;
        }
        return bits;
    }
}
