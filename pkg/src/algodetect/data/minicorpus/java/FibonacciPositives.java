public class FibonacciPositives {

    public static long fib(int n) {
        if (n <= 1) {
            return n;
        }
        return fib(n - 1) + fib(n - 2);
    }

    public static long fibIterative(int n) {
        if (n <= 1) {
            return n;
        }
        long a = 0;
        long b = 1;
        for (int i = 2; i <= n; i++) {
            long c = a + b;
            a = b;
            b = c;
        }
        return b;
    }

    public static long fibonacciMemo(int n, long[] memo) {
        if (n <= 1) {
            return n;
        }
        if (memo[n] != 0) {
            return memo[n];
        }
        memo[n] = fibonacciMemo(n - 1, memo) + fibonacciMemo(n - 2, memo);
        return memo[n];
    }

    public static long[] fibArray(int count) {
        long[] f = new long[Math.max(2, count)];
        f[0] = 0;
        f[1] = 1;
        for (int i = 2; i < count; i++) {
            f[i] = f[i - 1] + f[i - 2];
        }
        return f;
    }

    public static long fibonacciWhile(int n) {
        long prev = 0;
        long next = 1;
        int i = 1;
        while (i < n) {
            long sum = prev + next;
            prev = next;
            next = sum;
            i++;
        }
        return n == 0 ? 0 : next;
    }

    public static java.math.BigInteger fibBig(int n) {
        java.math.BigInteger a = java.math.BigInteger.ZERO;
        java.math.BigInteger b = java.math.BigInteger.ONE;
        for (int i = 0; i < n; i++) {
            java.math.BigInteger t = a.add(b);
            a = b;
            b = t;
        }
        return a;
    }

    public static String fibPrintSeries(int terms) {
        StringBuilder sb = new StringBuilder();
        long a = 0;
        long b = 1;
        for (int i = 0; i < terms; i++) {
            sb.append(a).append(" ");
            long c = a + b;
            a = b;
            b = c;
        }
        return sb.toString().trim();
    }

    public static long nthFibonacci(int n) {
        long first = 0;
        long second = 1;
        for (int i = 2; i <= n; i++) {
            long temp = first + second;
            first = second;
            second = temp;
        }
        return n == 0 ? first : second;
    }

    public static long fibTail(int n, long a, long b) {
        if (n == 0) {
            return a;
        }
        return fibTail(n - 1, b, a + b);
    }

    static long sequence(int steps) {
        long prev = 0;
        long temp = 1;
        for (int i = 0; i < steps; i++) {
            long next = prev + temp;
            prev = temp;
            temp = next;
        }
        return prev;
    }
}
